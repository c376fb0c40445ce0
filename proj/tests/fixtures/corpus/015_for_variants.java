class ForLoops {
    void loops(int n) {
        for (int i = 0; i < n; i++) { touch(i); }
        for (;;) { return; }
        int j;
        for (j = 0, k = 1; j < n; j++, k += 2) touch(j);
        for (int a = n; a > 0; --a) { }
    }
}
