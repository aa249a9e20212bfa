public class Haptics {
    private Vibrator vibrator;

    // An unrelated helper that happens to share the copied method's name.
    private int createVibration() {
        return 1;
    }

    void tick() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(createVibration1(3, 9 / 3));
        } else {
            vibrator.vibrate(createVibration() * 10L);
        }
    }

    public VibrationEffect createVibration1(int time,
            int amplitude) {
        return VibrationEffect.createOneShot(time, amplitude);
    }
}
