/* search a sorted table of longs */
long bsearch_long(long *table, long count, long target)
{
    long left = 0, right = count - 1;
    for (;;) {
        long middle;
        if (left > right)
            break;
        middle = (left + right) >> 1;
        if (table[middle] < target) {
            left = middle + 1;
        } else if (table[middle] > target) {
            right = middle - 1;
        } else {
            return middle;
        }
    }
    return -1;
}
