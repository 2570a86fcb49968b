package demo.core;

public class Logger {
    private static final int MAX_LINE = 120;
    private final String prefix;
    private int dropped;

    public Logger(String prefix) {
        this.prefix = prefix;
        this.dropped = 0;
    }

    public void warn(String message) {
        if (message.length() > MAX_LINE) {
            this.dropped = this.dropped + 1;
            return;
        }
        System.out.println(message);
    }

    public int droppedCount() {
        return this.dropped;
    }
}
