class Cells {
    void decorate(Activity activity, TextView cell) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            cell.setTextAppearance(android.R.style.TextAppearance_Small);
        } else {
            cell.setTextAppearance(activity, android.R.style.TextAppearance_Small);
        }
    }
}
