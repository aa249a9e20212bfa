public class MainActivity extends AppCompatActivity {
    private Vibrator vibrator;
    private int duration = 9;
    private int frequency = 3;
    public int amplitude = duration / frequency;

    public VibrationEffect createVibration(int time,
            int amplitude) {
        return VibrationEffect.createOneShot(time, amplitude);
    }

    public void onCreate() {
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(createVibration(3, amplitude));
        } else {
            vibrator.vibrate(50);
        }
    }
}
