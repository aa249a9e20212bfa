class Diagnostics {
    private TelephonyManager telephonyManager;

    void dump(StringBuilder out) {
        String id;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            id = telephonyManager.getImei();
        } else {
            id = telephonyManager.getDeviceId();
        }
        out.append("device: ").append(id);
    }
}
