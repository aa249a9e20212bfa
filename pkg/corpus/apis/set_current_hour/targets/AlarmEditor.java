public class AlarmEditor {
    private TimePicker timePicker;
    private int lastHour;

    void restore() {
        timePicker.setCurrentHour(lastHour + 1);
    }
}
