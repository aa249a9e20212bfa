public class Sync {
    void copy(TimePicker from, TimePicker to) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            to.setMinute(from.getCurrentMinute());
        } else {
            to.setCurrentMinute(from.getCurrentMinute());
        }
    }
}
