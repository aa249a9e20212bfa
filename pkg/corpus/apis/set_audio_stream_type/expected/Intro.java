class Intro {
    private MediaPlayer intro;

    void setup() {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            intro.setAudioAttributes(new AudioAttributes.Builder().build());
        } else {
            intro.setAudioStreamType(AudioManager.STREAM_SYSTEM);
        }
    }
}
