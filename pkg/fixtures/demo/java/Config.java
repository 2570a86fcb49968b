package demo.core;

public class Config {
    public static final int MAX_ENTRIES = 256;
    public static final long TIMEOUT_MS = 5000;
    private final String name;

    public Config(String name) {
        this.name = name;
    }

    public String getName() {
        return this.name;
    }

    public int capacity() {
        return MAX_ENTRIES;
    }
}
