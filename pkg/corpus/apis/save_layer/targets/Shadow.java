class Shadow {
    void paint(Canvas c, float w, float h) {
        final int count = c.saveLayer(0, 0, w, h, null, Canvas.ALL_SAVE_FLAG);
        drawShadow(c);
        c.restoreToCount(count);
    }
}
