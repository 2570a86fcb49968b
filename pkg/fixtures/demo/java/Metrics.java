package demo.net;

public class Metrics {
    private static final double SMOOTHING = 0.9;
    private final String label;
    private double average;

    public Metrics(String label) {
        this.label = label;
        this.average = 0.0;
    }

    public static double zero() {
        return 0.0;
    }

    public void record(double sample) {
        double blended = this.average * SMOOTHING;
        this.average = blended + sample;
    }

    public double current() {
        return this.average;
    }
}
