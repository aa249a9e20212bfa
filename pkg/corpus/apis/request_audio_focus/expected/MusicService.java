public class MusicService extends Service implements AudioManager.OnAudioFocusChangeListener {
    private AudioManager am;

    boolean start() {
        int granted;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            granted = am.requestAudioFocus(new AudioFocusRequestOreo().getAudioFocusRequest());
        } else {
            granted = am.requestAudioFocus(this, AudioManager.STREAM_MUSIC, AudioManager.AUDIOFOCUS_GAIN);
        }
        return granted == AudioManager.AUDIOFOCUS_REQUEST_GRANTED;
    }

    @Override
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
