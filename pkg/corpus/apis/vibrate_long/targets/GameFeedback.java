public class GameFeedback {
    private final Context context;

    GameFeedback(Context context) {
        this.context = context;
    }

    void onHit() {
        Vibrator vib = (Vibrator) context.getSystemService(Context.VIBRATOR_SERVICE);
        vib.vibrate(100);
    }

    void onMiss() {
        Vibrator vib = (Vibrator) context.getSystemService(Context.VIBRATOR_SERVICE);
        vib.vibrate(30);
    }
}
