public class Jukebox {
    private MediaPlayer player;

    void prepare(String url) throws IOException {
        player = new MediaPlayer();
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            player.setAudioAttributes(new AudioAttributes.Builder().build());
        } else {
            player.setAudioStreamType(AudioManager.STREAM_MUSIC);
        }
        player.setDataSource(url);
    }
}
