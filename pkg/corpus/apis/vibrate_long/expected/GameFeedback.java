public class GameFeedback {
    private final Context context;

    GameFeedback(Context context) {
        this.context = context;
    }

    void onHit() {
        Vibrator vib = (Vibrator) context.getSystemService(Context.VIBRATOR_SERVICE);
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vib.vibrate(createVibration(3, 9 / 3));
        } else {
            vib.vibrate(100);
        }
    }

    void onMiss() {
        Vibrator vib = (Vibrator) context.getSystemService(Context.VIBRATOR_SERVICE);
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vib.vibrate(createVibration(3, 9 / 3));
        } else {
            vib.vibrate(30);
        }
    }

    public VibrationEffect createVibration(int time,
            int amplitude) {
        return VibrationEffect.createOneShot(time, amplitude);
    }
}
