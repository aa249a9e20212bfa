public class NewsAdapter extends RecyclerView.Adapter<NewsAdapter.Holder> {
    private List<Article> items;

    public void onBindViewHolder(Holder holder, int position) {
        Article a = items.get(position);
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            holder.title.setText(Html.fromHtml(a.getTitle(), Html.FROM_HTML_MODE_LEGACY));
        } else {
            holder.title.setText(Html.fromHtml(a.getTitle()));
        }
    }
}
