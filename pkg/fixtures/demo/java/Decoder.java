package demo.codec;

public class Decoder {
    public static final int HEADER_BYTES = 16;
    private final boolean strict;

    public Decoder(boolean strict) {
        this.strict = strict;
    }

    public static boolean valid(int total) {
        return total >= 0;
    }

    public int payload(int total) {
        if (total < HEADER_BYTES) {
            return 0;
        }
        return total - HEADER_BYTES;
    }

    public boolean isStrict() {
        return this.strict;
    }
}
