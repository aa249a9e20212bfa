public class QuarterPicker {
    private TimePicker picker;

    void roundTo(int minute) {
        int rounded = (minute / 15) * 15;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            picker.setMinute(rounded);
        } else {
            picker.setCurrentMinute(rounded);
        }
    }
}
