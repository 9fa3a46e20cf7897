#include <stdlib.h>
#include <string.h>

/* maximise profit of items packed into a bag of limited weight */
long knap01(const int *w, const long *profit, unsigned items, unsigned limit)
{
    long *dp = malloc((limit + 1) * sizeof(long));
    long answer;
    unsigned k = 0;
    memset(dp, 0, (limit + 1) * sizeof(long));
    while (k < items) {
        unsigned cap = limit;
        while (cap >= (unsigned)w[k]) {
            long cand = dp[cap - w[k]] + profit[k];
            if (cand > dp[cap])
                dp[cap] = cand;
            if (cap == 0)
                break;
            cap--;
        }
        k++;
    }
    answer = dp[limit];
    free(dp);
    return answer;
}
