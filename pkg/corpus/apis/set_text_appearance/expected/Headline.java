public class Headline extends LinearLayout {
    private TextView title;

    public Headline(Context context) {
        super(context);
        title = new TextView(context);
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            title.setTextAppearance(R.style.TextAppearance_Large);
        } else {
            title.setTextAppearance(context, R.style.TextAppearance_Large);
        }
    }
}
