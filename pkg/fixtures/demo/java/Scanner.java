package demo.text;

public class Scanner {
    private static final int TAB_WIDTH = 4;
    private final String input;
    private int line;

    public Scanner(String input) {
        this.input = input;
        this.line = 1;
    }

    public static int spaces(int offset) {
        int width = offset + offset;
        return width;
    }

    public void newline() {
        this.line = this.line + 1;
    }

    public int column(int offset) {
        int width = offset * TAB_WIDTH;
        return width;
    }

    public int currentLine() {
        return this.line;
    }
}
