public class MeetingDialog extends DialogFragment {
    private Meeting meeting;

    public void onTimeChosen(TimePicker view, int hourOfDay) {
        meeting.hour = hourOfDay;
        meeting.minute = view.getCurrentMinute();
    }
}
