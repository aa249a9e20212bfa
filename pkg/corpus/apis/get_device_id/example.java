public class DeviceInfo {
    private TelephonyManager telephony;

    String id() {
        String deviceId;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            deviceId = telephony.getImei();
        } else {
            deviceId = telephony.getDeviceId();
        }
        return deviceId;
    }
}
