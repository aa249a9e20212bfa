public class FadeDrawable extends Drawable {
    private final Paint alphaPaint = new Paint();

    @Override
    public void draw(Canvas canvas) {
        Rect b = getBounds();
        canvas.saveLayer(b.left, b.top, b.right, b.bottom, alphaPaint, Canvas.ALL_SAVE_FLAG);
        drawContent(canvas);
        canvas.restore();
    }
}
