public class Buzzer {
    private Vibrator v;

    public void buzz(long ms) {
        v.vibrate(ms);
    }
}
