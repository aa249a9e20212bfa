public class Wizard {
    private Views views;

    void prefill(Calendar cal) {
        views.picker().setCurrentHour(cal.get(Calendar.HOUR_OF_DAY));
    }
}
