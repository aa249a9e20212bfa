public class Tracker implements GpsStatus.Listener {
    private LocationManager lm;

    void begin() {
        lm.addGpsStatusListener(this);
    }

    public void onGpsStatusChanged(int event) {
    }
}
