class Hanoi {
    int moves;

    void solve(int n, int from, int to, int via) {
        if (n == 0) return;
        solve(n - 1, from, via, to);
        moves++;
        solve(n - 1, via, to, from);
    }
}
