public class Registration {
    private TelephonyManager tm;
    private Payload payload;

    void fill() {
        payload.imei = tm.getDeviceId();
        payload.send();
    }
}
