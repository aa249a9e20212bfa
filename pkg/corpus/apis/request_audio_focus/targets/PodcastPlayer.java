public class PodcastPlayer {
    private final AudioManager audioManager;
    private final AudioManager.OnAudioFocusChangeListener focusListener;

    PodcastPlayer(AudioManager audioManager, AudioManager.OnAudioFocusChangeListener l) {
        this.audioManager = audioManager;
        this.focusListener = l;
    }

    int requestFocus() {
        return audioManager.requestAudioFocus(focusListener, AudioManager.STREAM_MUSIC, AudioManager.AUDIOFOCUS_GAIN_TRANSIENT);
    }
}
