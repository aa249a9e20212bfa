class SosSignal {
    void send(Vibrator vibrator) {
        long[] sos = new long[] {0, 100, 100, 100, 100, 100, 300, 300, 100, 300};
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.O) {
            vibrator.vibrate(VibrationEffect.createWaveform(sos, -1));
        } else {
            vibrator.vibrate(sos, -1);
        }
    }
}
