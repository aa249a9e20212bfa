public class AboutScreen {
    private TextView body;

    void bind() {
        Spanned span;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            span = Html.fromHtml("<h2>Title</h2><br>", Html.FROM_HTML_MODE_LEGACY);
        } else {
            span = Html.fromHtml("<h2>Title</h2><br>");
        }
        body.setText(span);
    }
}
