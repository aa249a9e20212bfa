public class AboutScreen {
    private TextView body;

    void bind() {
        Spanned span = Html.fromHtml("<h2>Title</h2><br>");
        body.setText(span);
    }
}
