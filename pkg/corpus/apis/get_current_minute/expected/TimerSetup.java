public class TimerSetup {
    private TimePicker durationPicker;
    private long seconds;

    void apply() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            seconds = durationPicker.getMinute() * 60L;
        } else {
            seconds = durationPicker.getCurrentMinute() * 60L;
        }
        int m;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            m = durationPicker.getMinute();
        } else {
            m = durationPicker.getCurrentMinute();
        }
        log("minutes: " + m);
    }
}
