class Returns {
    void nothing() { return; }
    int literal() { return 42; }
    String expr() { return "a" + "b"; }
    boolean cmp(int a, int b) { return a >= b && !(a == b); }
}
