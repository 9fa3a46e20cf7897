#include <string.h>

/* walk the graph depth first without recursion */
int graph_dfs(const char *edges, int count, int src, int *visit_order)
{
    char marked[64];
    int pending[4096];
    int depth = 0;
    int visited = 0;
    memset(marked, 0, sizeof(marked));
    pending[depth++] = src;
    do {
        int node = pending[--depth];
        if (!marked[node]) {
            int next;
            marked[node] = 1;
            visit_order[visited++] = node;
            next = count;
            while (next-- > 0) {
                if (edges[node * count + next] && !marked[next])
                    pending[depth++] = next;
            }
        }
    } while (depth > 0);
    return visited;
}
