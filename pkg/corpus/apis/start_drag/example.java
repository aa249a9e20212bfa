public class DragHelper {
    boolean begin(View view, ClipData data) {
        View.DragShadowBuilder shadow = new View.DragShadowBuilder(view);
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.N) {
            return view.startDragAndDrop(data, shadow, null, 0);
        } else {
            return view.startDrag(data, shadow, null, 0);
        }
    }
}
