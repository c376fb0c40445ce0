class Compact {
    int abs(int v) {
        if (v < 0) return -v;
        return v;
    }
    void noElse(boolean b) { if (b) doIt(); }
}
