public class NewsAdapter extends RecyclerView.Adapter<NewsAdapter.Holder> {
    private List<Article> items;

    public void onBindViewHolder(Holder holder, int position) {
        Article a = items.get(position);
        holder.title.setText(Html.fromHtml(a.getTitle()));
    }
}
