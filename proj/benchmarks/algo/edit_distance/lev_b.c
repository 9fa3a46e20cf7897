// Compute the edit distance with a full DP table.
int levenshtein(char *a, int la, char *b, int lb)
{
    int d[64][64];
    int i, j;
    for (i = 0; i <= la; i++)
        d[i][0] = i;
    for (j = 0; j <= lb; j++)
        d[0][j] = j;
    for (i = 1; i <= la; i++) {
        for (j = 1; j <= lb; j++) {
            int c = (a[i - 1] != b[j - 1]);
            int v = d[i - 1][j] + 1;
            if (d[i][j - 1] + 1 < v)
                v = d[i][j - 1] + 1;
            if (d[i - 1][j - 1] + c < v)
                v = d[i - 1][j - 1] + c;
            d[i][j] = v;
        }
    }
    return d[la][lb];
}
