using System;

namespace Demo.Core {
    public class Logger {
        private static readonly int MaxLine = 120;
        private readonly string prefix;
        private int dropped;

        public Logger(string prefix) {
            this.prefix = prefix;
            this.dropped = 0;
        }

        public void Warn(string message) {
            if (message.Length() > MaxLine) {
                this.dropped = this.dropped + 1;
                return;
            }
            Console.WriteLine(message);
        }

        public int DroppedCount() {
            return this.dropped;
        }
    }
}
