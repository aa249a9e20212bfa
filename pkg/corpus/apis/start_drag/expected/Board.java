class Board {
    void pick(Piece piece) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            piece.view.startDragAndDrop(null, new View.DragShadowBuilder(piece.view), piece, 0);
        } else {
            piece.view.startDrag(null, new View.DragShadowBuilder(piece.view), piece, 0);
        }
    }
}
