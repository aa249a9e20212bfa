class Intro {
    private MediaPlayer intro;

    void setup() {
        intro.setAudioStreamType(AudioManager.STREAM_SYSTEM);
    }
}
