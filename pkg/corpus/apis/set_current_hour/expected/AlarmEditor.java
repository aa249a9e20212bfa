public class AlarmEditor {
    private TimePicker timePicker;
    private int lastHour;

    void restore() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            timePicker.setHour(lastHour + 1);
        } else {
            timePicker.setCurrentHour(lastHour + 1);
        }
    }
}
