class Loop {
    long i;

    void run(int n) {
        for (int i = 0; i < n; i++) {
            n = i;
        }
        i = n;
    }
}
