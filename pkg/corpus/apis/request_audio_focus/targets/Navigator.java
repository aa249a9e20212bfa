public class Navigator implements AudioManager.OnAudioFocusChangeListener {
    private AudioManager audio;
    private int focusState;

    void speak(String text) {
        focusState = audio.requestAudioFocus(this, AudioManager.STREAM_NOTIFICATION,
                AudioManager.AUDIOFOCUS_GAIN_TRANSIENT_MAY_DUCK);
        tts.speak(text);
    }

    public void onAudioFocusChange(int change) {
    }
}
