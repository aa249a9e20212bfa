public class DateRange {
    private String dateTime;

    void describe(TimePicker timePickerBegin, TimePicker timePickerEnd) {
        dateTime = timePickerBegin.getCurrentHour() + ":" +
                timePickerBegin.getCurrentMinute() + "-" +
                timePickerEnd.getCurrentHour() + ":";
    }
}
