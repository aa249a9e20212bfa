public class Wizard {
    private Views views;

    void prefill(Calendar cal) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            views.picker().setHour(cal.get(Calendar.HOUR_OF_DAY));
        } else {
            views.picker().setCurrentHour(cal.get(Calendar.HOUR_OF_DAY));
        }
    }
}
