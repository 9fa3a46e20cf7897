struct node {
    struct node *lchild;
    struct node *rchild;
    struct node *up;
    int red;
    long val;
};

// rotate the subtree rooted at n to the left; returns the new root
struct node *rotateLeft(struct node *root, struct node *n)
{
    struct node *pivot = n->rchild;
    n->rchild = pivot->lchild;
    if (pivot->lchild)
        pivot->lchild->up = n;
    pivot->up = n->up;
    if (!n->up) {
        root = pivot;
    } else if (n == n->up->lchild) {
        n->up->lchild = pivot;
    } else {
        n->up->rchild = pivot;
    }
    pivot->lchild = n;
    n->up = pivot;
    return root;
}
