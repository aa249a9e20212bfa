public class ClockDialog {
    private TimePicker tp;

    void init() {
        tp.setIs24HourView(true);
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            tp.setMinute(0);
        } else {
            tp.setCurrentMinute(0);
        }
        tp.setCurrentHour(12);
    }
}
