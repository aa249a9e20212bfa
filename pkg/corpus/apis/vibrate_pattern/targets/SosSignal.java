class SosSignal {
    void send(Vibrator vibrator) {
        long[] sos = new long[] {0, 100, 100, 100, 100, 100, 300, 300, 100, 300};
        vibrator.vibrate(sos, -1);
    }
}
