#include <stdlib.h>

/* Iterative depth-first search over an adjacency matrix.
 * Writes the visit order into order[] and returns the number visited. */
int dfs_iterative(int *adj, int n, int start, int *order)
{
    int *stack = malloc(n * n * sizeof(int));
    int *visited = calloc(n, sizeof(int));
    int top = 0;
    int count = 0;
    int v, w;

    stack[top++] = start;
    while (top > 0) {
        v = stack[--top];
        if (visited[v])
            continue;
        visited[v] = 1;
        order[count++] = v;
        for (w = n - 1; w >= 0; w--) {
            if (adj[v * n + w] && !visited[w])
                stack[top++] = w;
        }
    }
    free(stack);
    free(visited);
    return count;
}
