public class TileView extends View {
    public boolean onLongClick(View v) {
        ClipData data = ClipData.newPlainText("tile", getTag().toString());
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            v.startDragAndDrop(data, new View.DragShadowBuilder(v), v, 0);
        } else {
            v.startDrag(data, new View.DragShadowBuilder(v), v, 0);
        }
        return true;
    }
}
