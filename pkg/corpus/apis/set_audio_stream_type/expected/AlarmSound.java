public class AlarmSound {
    void play(Context ctx, MediaPlayer mp, int stream) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            mp.setAudioAttributes(new AudioAttributes.Builder().build());
        } else {
            mp.setAudioStreamType(stream);
        }
        mp.start();
    }
}
