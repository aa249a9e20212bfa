public class Navigator implements AudioManager.OnAudioFocusChangeListener {
    private AudioManager audio;
    private int focusState;

    void speak(String text) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            focusState = audio.requestAudioFocus(new AudioFocusRequestOreo().getAudioFocusRequest());
        } else {
            focusState = audio.requestAudioFocus(this, AudioManager.STREAM_NOTIFICATION, AudioManager.AUDIOFOCUS_GAIN_TRANSIENT_MAY_DUCK);
        }
        tts.speak(text);
    }

    public void onAudioFocusChange(int change) {
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
