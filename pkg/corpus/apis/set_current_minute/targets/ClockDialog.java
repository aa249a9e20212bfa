public class ClockDialog {
    private TimePicker tp;

    void init() {
        tp.setIs24HourView(true);
        tp.setCurrentMinute(0);
        tp.setCurrentHour(12);
    }
}
