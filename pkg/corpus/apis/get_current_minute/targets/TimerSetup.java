public class TimerSetup {
    private TimePicker durationPicker;
    private long seconds;

    void apply() {
        seconds = durationPicker.getCurrentMinute() * 60L;
        int m = durationPicker.getCurrentMinute();
        log("minutes: " + m);
    }
}
