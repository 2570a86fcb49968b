namespace Demo.Text {
    public class Scanner {
        private static readonly int TabWidth = 4;
        private readonly string input;
        private int line;

        public Scanner(string input) {
            this.input = input;
            this.line = 1;
        }

        public static int Spaces(int offset) {
            int width = offset + offset;
            return width;
        }

        public void Newline() {
            this.line = this.line + 1;
        }

        public int Column(int offset) {
            int width = offset * TabWidth;
            return width;
        }

        public int CurrentLine() {
            return this.line;
        }
    }
}
