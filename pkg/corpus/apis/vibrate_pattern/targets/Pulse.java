public class Pulse {
    private static final long[] PATTERN = {0, 200, 100, 200};
    private Vibrator vibrator;

    void start() {
        vibrator.vibrate(PATTERN, -1);
    }
}
