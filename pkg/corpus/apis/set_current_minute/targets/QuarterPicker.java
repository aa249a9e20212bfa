public class QuarterPicker {
    private TimePicker picker;

    void roundTo(int minute) {
        int rounded = (minute / 15) * 15;
        picker.setCurrentMinute(rounded);
    }
}
