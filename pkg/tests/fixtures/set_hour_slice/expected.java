class MainActivity {
    public static void main() {
        int parameterVariable0 = lastHour + 1;
        TimePicker classNameVariable = timePicker;
        if (Build.VERSION.SDK_INT >=
                Build.VERSION_CODES.M) {
            classNameVariable.setHour(parameterVariable0);
        } else {
            classNameVariable.setCurrentHour(
                    parameterVariable0);
        }
    }
}
