public class NightMode {
    private static final int DEFAULT_HOUR = 22;

    void reset(TimePicker picker, boolean custom, int hour) {
        if (custom) {
            picker.setCurrentHour(hour);
        } else {
            picker.setCurrentHour(DEFAULT_HOUR);
        }
    }
}
