namespace Demo.Text {
    public class Parser {
        public static readonly char Separator = ',';
        private readonly string source;
        private int position;

        public Parser(string source) {
            this.source = source;
            this.position = 0;
        }

        public int Advance(int step) {
            this.position = this.position + step;
            return this.position;
        }

        public bool Done(int length) {
            return this.position >= length;
        }
    }
}
