public class StyledLabel {
    void style(TextView label, Context ctx, int resId) {
        if (Build.VERSION.SDK_INT >= Build.VERSION_CODES.M) {
            label.setTextAppearance(resId);
        } else {
            label.setTextAppearance(ctx, resId);
        }
    }
}
