package com.example.reminders;

import android.widget.TimePicker;

public class ReminderForm {
    private TimePicker mPicker;
    private Reminder reminder;

    public void save() {
        int h = mPicker.getCurrentHour();
        reminder.setHour(h);
        reminder.commit();
    }
}
