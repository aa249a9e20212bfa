public class Headline extends LinearLayout {
    private TextView title;

    public Headline(Context context) {
        super(context);
        title = new TextView(context);
        title.setTextAppearance(context, R.style.TextAppearance_Large);
    }
}
