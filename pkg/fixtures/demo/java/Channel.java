package demo.io;

public class Channel {
    public static final int MAX_RETRIES = 3;
    private final String endpoint;
    private boolean open;

    public Channel(String endpoint) {
        this.endpoint = endpoint;
        this.open = false;
    }

    public boolean connect(int attempts) {
        if (attempts > MAX_RETRIES) {
            return false;
        }
        this.open = true;
        return this.open;
    }

    public void close() {
        this.open = false;
    }
}
