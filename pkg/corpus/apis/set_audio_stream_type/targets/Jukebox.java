public class Jukebox {
    private MediaPlayer player;

    void prepare(String url) throws IOException {
        player = new MediaPlayer();
        player.setAudioStreamType(AudioManager.STREAM_MUSIC);
        player.setDataSource(url);
    }
}
