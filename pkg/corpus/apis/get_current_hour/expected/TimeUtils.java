package com.example.util;

public final class TimeUtils {
    private TimeUtils() { }

    // Reads the selected hour from a picker.
    public static int hourOf(TimePicker tp) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            return tp.getHour();
        } else {
            return tp.getCurrentHour();
        }
    }
}
