namespace Demo.Codec {
    public class Encoder {
        public static readonly int BlockSize = 64;
        private readonly double scale;

        public Encoder(double scale) {
            this.scale = scale;
        }

        public static int Align(int offset) {
            int rounded = offset + offset;
            return rounded;
        }

        public double Encode(double value) {
            double scaled = value * this.scale;
            return scaled;
        }

        public int Blocks(int length) {
            int count = 0;
            while (length > BlockSize) {
                length = length - BlockSize;
                count = count + 1;
            }
            return count;
        }
    }
}
