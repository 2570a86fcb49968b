package demo.codec;

public class Encoder {
    public static final int BLOCK_SIZE = 64;
    private final double scale;

    public Encoder(double scale) {
        this.scale = scale;
    }

    public static int align(int offset) {
        int rounded = offset + offset;
        return rounded;
    }

    public double encode(double value) {
        double scaled = value * this.scale;
        return scaled;
    }

    public int blocks(int length) {
        int count = 0;
        while (length > BLOCK_SIZE) {
            length = length - BLOCK_SIZE;
            count = count + 1;
        }
        return count;
    }
}
