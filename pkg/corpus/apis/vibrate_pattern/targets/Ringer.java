public class Ringer {
    private Vibrator mVibrator;
    private boolean looping;

    void ring(long[] timings) {
        mVibrator.vibrate(timings, looping ? 0 : -1);
    }
}
