class Prefs {
    SharedPreferences.Editor editor;

    void store(TimePicker picker) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            editor.putInt("minute", picker.getMinute());
        } else {
            editor.putInt("minute", picker.getCurrentMinute());
        }
        editor.apply();
    }
}
