#include <string.h>
#include <stdlib.h>

/* Levenshtein edit distance between two strings. */
int edit_distance(const char *s, const char *t)
{
    int n = strlen(s);
    int m = strlen(t);
    int *prev = malloc((m + 1) * sizeof(int));
    int *cur = malloc((m + 1) * sizeof(int));
    int i, j, result;

    for (j = 0; j <= m; j++)
        prev[j] = j;
    for (i = 1; i <= n; i++) {
        cur[0] = i;
        for (j = 1; j <= m; j++) {
            int cost = s[i - 1] == t[j - 1] ? 0 : 1;
            int del = prev[j] + 1;
            int ins = cur[j - 1] + 1;
            int sub = prev[j - 1] + cost;
            int best = del < ins ? del : ins;
            cur[j] = best < sub ? best : sub;
        }
        for (j = 0; j <= m; j++)
            prev[j] = cur[j];
    }
    result = prev[m];
    free(prev);
    free(cur);
    return result;
}
