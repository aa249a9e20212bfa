public class AlarmSound {
    void play(Context ctx, MediaPlayer mp, int stream) {
        mp.setAudioStreamType(stream);
        mp.start();
    }
}
