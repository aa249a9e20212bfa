public class AudioPlayer {
    private MediaPlayer mMediaPlayer;

    private void setAttributes() {
        if (android.os.Build.VERSION.SDK_INT >=
                android.os.Build.VERSION_CODES.LOLLIPOP) {
            mMediaPlayer.setAudioAttributes(new
                    AudioAttributes.Builder().build());
        } else {
            mMediaPlayer.setAudioStreamType(AudioManager.STREAM_MUSIC);
        }
    }
}
