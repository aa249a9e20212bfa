public class MixedPositionProvider extends PositionProvider
        implements LocationListener, GpsStatus.Listener {
    private GnssStatus.Callback callback;

    public void startUpdates() {
        GpsStatus.Listener listener = this;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.N) {
            locationManager.registerGnssStatusCallback(
                    callback);
        }
        else {
            locationManager.addGpsStatusListener(listener);
        }
    }
}
