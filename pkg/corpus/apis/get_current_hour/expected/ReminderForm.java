package com.example.reminders;

import android.widget.TimePicker;

public class ReminderForm {
    private TimePicker mPicker;
    private Reminder reminder;

    public void save() {
        int h;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.M) {
            h = mPicker.getHour();
        } else {
            h = mPicker.getCurrentHour();
        }
        reminder.setHour(h);
        reminder.commit();
    }
}
