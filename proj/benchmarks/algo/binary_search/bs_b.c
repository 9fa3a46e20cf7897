// returns index of key in sorted array or -1
int binarySearch(const int *arr, int size, int key)
{
    int lo = 0;
    int hi = size;
    while (lo < hi) {
        int m = lo + (hi - lo) / 2;
        if (arr[m] == key)
            return m;
        if (arr[m] < key)
            lo = m + 1;
        else
            hi = m;
    }
    return -1;
}
