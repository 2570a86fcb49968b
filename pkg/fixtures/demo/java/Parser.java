package demo.text;

public class Parser {
    public static final char SEPARATOR = ',';
    private final String source;
    private int position;

    public Parser(String source) {
        this.source = source;
        this.position = 0;
    }

    public int advance(int step) {
        this.position = this.position + step;
        return this.position;
    }

    public boolean done(int length) {
        return this.position >= length;
    }
}
