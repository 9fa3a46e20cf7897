/* square and multiply, scanning exponent bits from the top */
int modpow(int a, int power, int n)
{
    long long r = 1;
    int bit;
    for (bit = 30; bit >= 0; bit--) {
        r = (r * r) % n;
        if ((power >> bit) & 1) {
            r = (r * a) % n;
        }
    }
    return (int)r;
}
