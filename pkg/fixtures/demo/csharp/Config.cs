namespace Demo.Core {
    public class Config {
        public static readonly int MaxEntries = 256;
        public static readonly long TimeoutMs = 5000;
        private readonly string name;

        public Config(string name) {
            this.name = name;
        }

        public string GetName() {
            return this.name;
        }

        public int Capacity() {
            return MaxEntries;
        }
    }
}
