class Shadow {
    void paint(Canvas c, float w, float h) {
        final int count;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            count = c.saveLayer(0, 0, w, h, null);
        } else {
            count = c.saveLayer(0, 0, w, h, null, Canvas.ALL_SAVE_FLAG);
        }
        drawShadow(c);
        c.restoreToCount(count);
    }
}
