class Board {
    void pick(Piece piece) {
        piece.view.startDrag(null, new View.DragShadowBuilder(piece.view), piece, 0);
    }
}
