namespace Demo.Net {
    public class Metrics {
        private static readonly double Smoothing = 0.9;
        private readonly string label;
        private double average;

        public Metrics(string label) {
            this.label = label;
            this.average = 0.0;
        }

        public static double Zero() {
            return 0.0;
        }

        public void Record(double sample) {
            double blended = this.average * Smoothing;
            this.average = blended + sample;
        }

        public double Current() {
            return this.average;
        }
    }
}
