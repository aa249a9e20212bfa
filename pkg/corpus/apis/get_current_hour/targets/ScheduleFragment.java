public class ScheduleFragment extends Fragment {
    private int startHour;
    private boolean editing;
    private TimePicker startPicker;

    void onConfirm() {
        if (editing) this.startHour = startPicker.getCurrentHour();
        close();
    }
}
