public class Ringer {
    private Vibrator mVibrator;
    private boolean looping;

    void ring(long[] timings) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            mVibrator.vibrate(VibrationEffect.createWaveform(timings, looping ? 0 : -1));
        } else {
            mVibrator.vibrate(timings, looping ? 0 : -1);
        }
    }
}
