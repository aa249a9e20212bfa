public class TimeFragment extends Fragment {
    private TimePicker timePicker;

    public void setTimeH(TimePicker tp, int hour) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            tp.setHour(hour);
        } else {
            tp.setCurrentHour(hour);
        }
    }
}
