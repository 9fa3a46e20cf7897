void ins_sort(long *v, unsigned n)
{
    unsigned i;
    for (i = 1; i < n; i++) {
        long x = v[i];
        unsigned j = i;
        // move the element left until it is in order
        for (; j > 0 && v[j - 1] > x; j--)
            v[j] = v[j - 1];
        v[j] = x;
    }
}
