class Diagnostics {
    private TelephonyManager telephonyManager;

    void dump(StringBuilder out) {
        String id = telephonyManager.getDeviceId();
        out.append("device: ").append(id);
    }
}
