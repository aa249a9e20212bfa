public class Haptics {
    private Vibrator vibrator;

    // An unrelated helper that happens to share the copied method's name.
    private int createVibration() {
        return 1;
    }

    void tick() {
        vibrator.vibrate(createVibration() * 10L);
    }
}
