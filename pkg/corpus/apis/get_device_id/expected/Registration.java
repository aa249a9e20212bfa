public class Registration {
    private TelephonyManager tm;
    private Payload payload;

    void fill() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            payload.imei = tm.getImei();
        } else {
            payload.imei = tm.getDeviceId();
        }
        payload.send();
    }
}
