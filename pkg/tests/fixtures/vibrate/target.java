public class Alarm {
    private Vibrator vibrator;

    void ring(long millis) {
        vibrator.vibrate(millis);
        log("ring");
    }
}
