package demo.net;

public class Session {
    public static final long IDLE_LIMIT_MS = 30000;
    private final String token;
    private long lastSeen;

    public Session(String token) {
        this.token = token;
        this.lastSeen = 0;
    }

    public void touch(long now) {
        this.lastSeen = now;
    }

    public boolean expired(long now) {
        long idle = now - this.lastSeen;
        return idle > IDLE_LIMIT_MS;
    }
}
