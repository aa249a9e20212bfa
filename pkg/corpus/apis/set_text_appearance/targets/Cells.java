class Cells {
    void decorate(Activity activity, TextView cell) {
        cell.setTextAppearance(activity, android.R.style.TextAppearance_Small);
    }
}
