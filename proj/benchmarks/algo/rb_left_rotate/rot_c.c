struct tnode {
    int data;
    char black;
    struct tnode *kid[2];
    struct tnode *dad;
};

/* rotate left: the right child takes the place of node */
void rb_rotate_left(struct tnode **rootp, struct tnode *node)
{
    struct tnode *child = node->kid[1];
    struct tnode *parent = node->dad;

    node->kid[1] = child->kid[0];
    if (child->kid[0] != 0)
        child->kid[0]->dad = node;
    child->dad = parent;
    if (parent == 0)
        *rootp = child;
    else if (parent->kid[0] == node)
        parent->kid[0] = child;
    else
        parent->kid[1] = child;
    child->kid[0] = node;
    node->dad = child;
}
