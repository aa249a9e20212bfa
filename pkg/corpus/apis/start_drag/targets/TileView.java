public class TileView extends View {
    public boolean onLongClick(View v) {
        ClipData data = ClipData.newPlainText("tile", getTag().toString());
        v.startDrag(data, new View.DragShadowBuilder(v), v, 0);
        return true;
    }
}
