// insertion sort, ascending order
void sortInsert(int arr[], int len)
{
    for (int k = 1; k < len; ++k) {
        int cur = arr[k];
        int pos = k;
        while (pos > 0 && arr[pos - 1] > cur) {
            arr[pos] = arr[pos - 1];
            --pos;
        }
        arr[pos] = cur;
    }
}
