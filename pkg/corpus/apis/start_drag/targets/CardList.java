public class CardList {
    private View selected;

    boolean drag(ClipData clip, View.DragShadowBuilder builder) {
        boolean started = selected.startDrag(clip, builder, null, 0);
        return started;
    }
}
