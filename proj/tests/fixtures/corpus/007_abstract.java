public abstract class Shape {
    abstract double area();

    protected abstract String describe(int detail);

    double twice() {
        return area() * 2;
    }
}
