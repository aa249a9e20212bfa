public class CardList {
    private View selected;

    boolean drag(ClipData clip, View.DragShadowBuilder builder) {
        boolean started;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            started = selected.startDragAndDrop(clip, builder, null, 0);
        } else {
            started = selected.startDrag(clip, builder, null, 0);
        }
        return started;
    }
}
