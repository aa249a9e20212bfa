package com.example.util;

public final class TimeUtils {
    private TimeUtils() { }

    // Reads the selected hour from a picker.
    public static int hourOf(TimePicker tp) {
        return tp.getCurrentHour();
    }
}
