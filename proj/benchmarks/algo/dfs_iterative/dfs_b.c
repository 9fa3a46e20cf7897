// non-recursive DFS using an explicit stack of vertices
int depthFirst(int graph[16][16], int nodes, int root, int out[])
{
    int seen[16];
    int stk[256];
    int sp = 0;
    int n_out = 0;
    for (int i = 0; i < nodes; i++)
        seen[i] = 0;
    stk[sp] = root;
    sp++;
    while (sp != 0) {
        sp--;
        int u = stk[sp];
        if (seen[u] != 0)
            continue;
        seen[u] = 1;
        out[n_out] = u;
        n_out++;
        for (int nb = nodes - 1; nb >= 0; nb--) {
            if (graph[u][nb] != 0 && seen[nb] == 0) {
                stk[sp] = nb;
                sp++;
            }
        }
    }
    return n_out;
}
