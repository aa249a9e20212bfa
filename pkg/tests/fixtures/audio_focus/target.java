public class RadioPlayer extends Service implements AudioManager.OnAudioFocusChangeListener {
    private AudioManager manager;

    public void play() {
        int status = manager.requestAudioFocus(this, AudioManager.STREAM_MUSIC, AudioManager.AUDIOFOCUS_GAIN);
        if (status == AudioManager.AUDIOFOCUS_REQUEST_GRANTED) {
            startPlayback();
        }
    }

    @Override
    public void onAudioFocusChange(int focusChange) {
    }
}
