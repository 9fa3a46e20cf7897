/* 0/1 knapsack: best total value within the capacity. */
int knapsack(int *weight, int *value, int n, int capacity)
{
    int best[1024];
    int i, c;

    for (c = 0; c <= capacity; c++)
        best[c] = 0;
    for (i = 0; i < n; i++) {
        for (c = capacity; c >= weight[i]; c--) {
            int take = best[c - weight[i]] + value[i];
            if (take > best[c])
                best[c] = take;
        }
    }
    return best[capacity];
}
