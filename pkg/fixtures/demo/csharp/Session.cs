namespace Demo.Net {
    public class Session {
        public static readonly long IdleLimitMs = 30000;
        private readonly string token;
        private long lastSeen;

        public Session(string token) {
            this.token = token;
            this.lastSeen = 0;
        }

        public void Touch(long now) {
            this.lastSeen = now;
        }

        public bool Expired(long now) {
            long idle = now - this.lastSeen;
            return idle > IdleLimitMs;
        }
    }
}
