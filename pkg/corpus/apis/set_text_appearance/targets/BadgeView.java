public class BadgeView {
    private final Context mContext;
    private TextView mCount;

    void setEmphasis(boolean strong) {
        int style = strong ? R.style.Badge_Strong : R.style.Badge;
        mCount.setTextAppearance(mContext, style);
    }
}
