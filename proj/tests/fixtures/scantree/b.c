/* loop and branch */
long mix(long n) {
    long total = 0;
    for (long i = 0; i < n; i = i + 1) {
        if (i == 2) { total = total + i; }
    }
    while (total > 9) { total = total - 1; }
    return total;
}
