public class CanvasWrapper {
    private Canvas mCanvas;

    public int saveLayer(float left, float top, float right,
            float bottom, @Nullable Paint paint,
            int saveFlags) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            return mCanvas.saveLayer(left, top, right, bottom, paint);
        } else {
            return mCanvas.saveLayer(left, top, right, bottom, paint, saveFlags);
        }
    }
}
