namespace Demo.IO {
    public class Buffer {
        private static readonly int DefaultCapacity = 1024;
        private readonly int capacity;
        private int used;

        public Buffer(int capacity) {
            this.capacity = capacity;
            this.used = 0;
        }

        public static int Clamp(int amount) {
            if (amount < 0) {
                return 0;
            }
            return amount;
        }

        public int Remaining() {
            return this.capacity - this.used;
        }

        public bool Push(int amount) {
            if (amount > Remaining()) {
                return false;
            }
            this.used = this.used + amount;
            return true;
        }

        public int DefaultCapacity() {
            return DefaultCapacity;
        }
    }
}
