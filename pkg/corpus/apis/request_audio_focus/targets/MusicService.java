public class MusicService extends Service implements AudioManager.OnAudioFocusChangeListener {
    private AudioManager am;

    boolean start() {
        int granted = am.requestAudioFocus(this, AudioManager.STREAM_MUSIC, AudioManager.AUDIOFOCUS_GAIN);
        return granted == AudioManager.AUDIOFOCUS_REQUEST_GRANTED;
    }

    @Override
    public void onAudioFocusChange(int change) {
    }
}
