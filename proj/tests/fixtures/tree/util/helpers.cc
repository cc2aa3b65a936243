// Small helpers used by the fixture tree.

int clamp_sum(int* xs, int n, int lo, int hi) {
    // sum then clamp into [lo, hi]
    int total = 0;
    for (int i = 0; i < n; ++i) {
        total += xs[i];
    }
    if (total < lo)
        return lo;
    if (total > hi)
        return hi;
    return total;
}

int absolute(int v) {
    if (v < 0) {
        return 0 - v;
    }
    return v;
}
