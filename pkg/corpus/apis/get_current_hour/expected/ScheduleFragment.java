public class ScheduleFragment extends Fragment {
    private int startHour;
    private boolean editing;
    private TimePicker startPicker;

    void onConfirm() {
        if (editing) {
            if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
                this.startHour = startPicker.getHour();
            } else {
                this.startHour = startPicker.getCurrentHour();
            }
        }
        close();
    }
}
