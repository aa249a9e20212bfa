public class NightMode {
    private static final int DEFAULT_HOUR = 22;

    void reset(TimePicker picker, boolean custom, int hour) {
        if (custom) {
            if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
                picker.setHour(hour);
            } else {
                picker.setCurrentHour(hour);
            }
        } else {
            if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
                picker.setHour(DEFAULT_HOUR);
            } else {
                picker.setCurrentHour(DEFAULT_HOUR);
            }
        }
    }
}
