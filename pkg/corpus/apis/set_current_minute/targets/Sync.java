public class Sync {
    void copy(TimePicker from, TimePicker to) {
        to.setCurrentMinute(from.getCurrentMinute());
    }
}
