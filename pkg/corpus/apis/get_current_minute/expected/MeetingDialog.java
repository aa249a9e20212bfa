public class MeetingDialog extends DialogFragment {
    private Meeting meeting;

    public void onTimeChosen(TimePicker view, int hourOfDay) {
        meeting.hour = hourOfDay;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            meeting.minute = view.getMinute();
        } else {
            meeting.minute = view.getCurrentMinute();
        }
    }
}
