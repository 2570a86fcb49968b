namespace Demo.Codec {
    public class Decoder {
        public static readonly int HeaderBytes = 16;
        private readonly bool strict;

        public Decoder(bool strict) {
            this.strict = strict;
        }

        public static bool Valid(int total) {
            return total >= 0;
        }

        public int Payload(int total) {
            if (total < HeaderBytes) {
                return 0;
            }
            return total - HeaderBytes;
        }

        public bool IsStrict() {
            return this.strict;
        }
    }
}
