namespace Demo.IO {
    public class Channel {
        public static readonly int MaxRetries = 3;
        private readonly string endpoint;
        private bool open;

        public Channel(string endpoint) {
            this.endpoint = endpoint;
            this.open = false;
        }

        public bool Connect(int attempts) {
            if (attempts > MaxRetries) {
                return false;
            }
            this.open = true;
            return this.open;
        }

        public void Close() {
            this.open = false;
        }
    }
}
