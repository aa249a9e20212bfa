public class AlarmActivity extends Activity {
    private TimePicker picker;
    private int hour;

    void readTime() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            hour = picker.getHour();
        } else {
            hour = picker.getCurrentHour();
        }
    }
}
