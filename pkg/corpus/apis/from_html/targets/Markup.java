import android.text.Html;

class Markup {
    static CharSequence render(String raw) {
        return Html.fromHtml(raw.trim());
    }
}
