public class Buzzer {
    private Vibrator v;

    public void buzz(long ms) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            v.vibrate(createVibration(3, 9 / 3));
        } else {
            v.vibrate(ms);
        }
    }

    public VibrationEffect createVibration(int time,
            int amplitude) {
        return VibrationEffect.createOneShot(time, amplitude);
    }
}
