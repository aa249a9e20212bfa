public class PlayerService extends Service implements AudioManager.OnAudioFocusChangeListener {
    private AudioManager audioManager;
    AudioFocusRequestOreo audioFocusRequestOreo = new AudioFocusRequestOreo();

    public void tryToGetAudioFocus() {
        OnAudioFocusChangeListener listener = this;
        int result;
        int type = AudioManager.STREAM_MUSIC;
        int duration = AudioManager.AUDIOFOCUS_GAIN;
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.O) {
            AudioFocusRequest request = audioFocusRequestOreo.
                    getAudioFocusRequest();
            result = audioManager.requestAudioFocus(request);
        } else {
            result = audioManager.requestAudioFocus(listener,
                    type, duration);
        }
    }

    @Override
    public void onAudioFocusChange(int focusChange) {
    }

    private class AudioFocusRequestOreo {
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
