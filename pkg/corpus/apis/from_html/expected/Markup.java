import android.text.Html;

class Markup {
    static CharSequence render(String raw) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            return Html.fromHtml(raw.trim(), Html.FROM_HTML_MODE_LEGACY);
        } else {
            return Html.fromHtml(raw.trim());
        }
    }
}
