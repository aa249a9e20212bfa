public class PodcastPlayer {
    private final AudioManager audioManager;
    private final AudioManager.OnAudioFocusChangeListener focusListener;

    PodcastPlayer(AudioManager audioManager, AudioManager.OnAudioFocusChangeListener l) {
        this.audioManager = audioManager;
        this.focusListener = l;
    }

    int requestFocus() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            return audioManager.requestAudioFocus(new AudioFocusRequestOreo().getAudioFocusRequest());
        } else {
            return audioManager.requestAudioFocus(focusListener, AudioManager.STREAM_MUSIC, AudioManager.AUDIOFOCUS_GAIN_TRANSIENT);
        }
    }

    public class AudioFocusRequestOreo {
        private AudioFocusRequest audioFocusRequest;

        public AudioFocusRequest getAudioFocusRequest() {
            if (audioFocusRequest == null) {
                audioFocusRequest = new AudioFocusRequest.Builder(AudioManager.AUDIOFOCUS_GAIN)
                        .setAudioAttributes(new AudioAttributes.Builder()
                                .setUsage(AudioAttributes.USAGE_MEDIA)
                                .build())
                        .build();
            }
            return audioFocusRequest;
        }
    }
}
