public class BadgeView {
    private final Context mContext;
    private TextView mCount;

    void setEmphasis(boolean strong) {
        int style = strong ? R.style.Badge_Strong : R.style.Badge;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            mCount.setTextAppearance(style);
        } else {
            mCount.setTextAppearance(mContext, style);
        }
    }
}
