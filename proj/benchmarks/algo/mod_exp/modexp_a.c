/* Compute (base ^ exp) mod m by repeated squaring. */
long mod_exp(long base, long exp, long m)
{
    long result = 1;

    base = base % m;
    while (exp > 0) {
        if (exp & 1)
            result = (result * base) % m;
        exp = exp >> 1;
        base = (base * base) % m;
    }
    return result;
}
