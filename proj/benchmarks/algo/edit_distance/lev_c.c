#include <string.h>

/* minimum number of insertions, deletions and substitutions */
unsigned strEditDist(const char *src, const char *dst)
{
    unsigned rows = strlen(src) + 1;
    unsigned cols = strlen(dst) + 1;
    unsigned dist[128][128];
    unsigned r = 0;
    while (r < rows) {
        unsigned c = 0;
        while (c < cols) {
            if (r == 0) {
                dist[r][c] = c;
            } else if (c == 0) {
                dist[r][c] = r;
            } else {
                unsigned subst = dist[r - 1][c - 1] + (src[r - 1] == dst[c - 1] ? 0 : 1);
                unsigned del = dist[r - 1][c] + 1;
                unsigned ins = dist[r][c - 1] + 1;
                unsigned m = subst;
                if (del < m)
                    m = del;
                if (ins < m)
                    m = ins;
                dist[r][c] = m;
            }
            c++;
        }
        r++;
    }
    return dist[rows - 1][cols - 1];
}
