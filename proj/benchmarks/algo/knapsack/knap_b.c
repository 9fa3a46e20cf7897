// classic knapsack with a two dimensional table
int knapsackDP(int W, int wt[], int val[], int count)
{
    int table[32][512];
    for (int item = 0; item <= count; item++) {
        for (int w = 0; w <= W; w++) {
            if (item == 0 || w == 0)
                table[item][w] = 0;
            else if (wt[item - 1] <= w) {
                int with = val[item - 1] + table[item - 1][w - wt[item - 1]];
                int without = table[item - 1][w];
                table[item][w] = with > without ? with : without;
            } else
                table[item][w] = table[item - 1][w];
        }
    }
    return table[count][W];
}
