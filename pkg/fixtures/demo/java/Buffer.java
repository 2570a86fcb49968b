package demo.io;

public class Buffer {
    private static final int DEFAULT_CAPACITY = 1024;
    private final int capacity;
    private int used;

    public Buffer(int capacity) {
        this.capacity = capacity;
        this.used = 0;
    }

    public static int clamp(int amount) {
        if (amount < 0) {
            return 0;
        }
        return amount;
    }

    public int remaining() {
        return this.capacity - this.used;
    }

    public boolean push(int amount) {
        if (amount > remaining()) {
            return false;
        }
        this.used = this.used + amount;
        return true;
    }

    public int defaultCapacity() {
        return DEFAULT_CAPACITY;
    }
}
