// fast modular exponentiation
unsigned long powMod(unsigned long b, unsigned long e, unsigned long mod)
{
    unsigned long acc = 1 % mod;
    b %= mod;
    for (; e != 0; e /= 2) {
        if (e % 2 == 1)
            acc = acc * b % mod;
        b = b * b % mod;
    }
    return acc;
}
