class Prefs {
    SharedPreferences.Editor editor;

    void store(TimePicker picker) {
        editor.putInt("minute", picker.getCurrentMinute());
        editor.apply();
    }
}
