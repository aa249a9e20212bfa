public class Pulse {
    private static final long[] PATTERN = {0, 200, 100, 200};
    private Vibrator vibrator;

    void start() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(VibrationEffect.createWaveform(PATTERN, -1));
        } else {
            vibrator.vibrate(PATTERN, -1);
        }
    }
}
