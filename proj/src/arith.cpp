#include "k2rank/arith.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

#include "k2rank/errors.hpp"

namespace k2rank {

namespace {

/* residue tables used to reject non-squares before taking a root */
template <unsigned M> constexpr std::array<bool, M> square_residues()
{
    std::array<bool, M> t{};
    for (unsigned i = 0; i < M; ++i)
        t[(i * i) % M] = true;
    return t;
}

constexpr auto sq64 = square_residues<64>();
constexpr auto sq63 = square_residues<63>();
constexpr auto sq65 = square_residues<65>();
constexpr auto sq11 = square_residues<11>();

bool maybe_square(u64 n)
{
    return sq64[n & 63] && sq63[n % 63] && sq65[n % 65] && sq11[n % 11];
}

bool maybe_square(u128 n)
{
    return sq64[static_cast<unsigned>(n & 63)] && sq63[static_cast<unsigned>(n % 63)]
           && sq65[static_cast<unsigned>(n % 65)] && sq11[static_cast<unsigned>(n % 11)];
}

unsigned bit_length(u128 n)
{
    auto hi = static_cast<u64>(n >> 64);
    if (hi)
        return 128 - static_cast<unsigned>(std::countl_zero(hi));
    return 64 - static_cast<unsigned>(std::countl_zero(static_cast<u64>(n)));
}

/* Newton iteration from an overestimate; decreases monotonically to floor(sqrt(n)). */
template <typename U> U newton_isqrt(U n)
{
    if (n < 2)
        return n;
    unsigned bits = bit_length(n);
    U x = U(1) << ((bits + 1) / 2);
    for (;;) {
        U y = (x + n / x) / 2;
        if (y >= x)
            return x;
        x = y;
    }
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s)
{
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1)
        return false;
    for (unsigned r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1)
            return false;
    }
    return true;
}

} // namespace

bool PrimeTable::contains(u64 n) const
{
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable sieve_primes(u64 limit)
{
    if (limit < 2)
        throw DomainError("sieve_primes: limit must be >= 2");

    // bit i stands for the odd number 2i+1
    u64 const odd_count = (limit + 1) / 2;
    std::vector<u64> composite((odd_count + 63) / 64, 0);
    auto test = [&](u64 i) { return (composite[i >> 6] >> (i & 63)) & 1; };
    auto mark = [&](u64 i) { composite[i >> 6] |= u64(1) << (i & 63); };

    for (u64 i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
        if (test(i))
            continue;
        u64 const q = 2 * i + 1;
        for (u64 j = (q * q) / 2; j < odd_count; j += q)
            mark(j);
    }

    std::vector<u64> primes{2};
    for (u64 i = 1; i < odd_count; ++i)
        if (!test(i))
            primes.push_back(2 * i + 1);
    return PrimeTable(limit, std::move(primes));
}

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set is exact below 3.3e24
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, s))
            return false;
    }
    return true;
}

int legendre(i64 a, u64 q)
{
    if (q < 3 || (q & 1) == 0)
        throw DomainError("legendre: modulus must be an odd prime, got " + std::to_string(q));

    i64 const r = a % static_cast<i64>(q);
    u64 x = static_cast<u64>(r < 0 ? r + static_cast<i64>(q) : r);
    u64 n = q;
    int sign = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            u64 const n8 = n & 7;
            if (n8 == 3 || n8 == 5)
                sign = -sign;
        }
        std::swap(x, n);
        if ((x & 3) == 3 && (n & 3) == 3)
            sign = -sign;
        x %= n;
    }
    return n == 1 ? sign : 0;
}

u64 isqrt(u64 n)
{
    return newton_isqrt<u64>(n);
}

u64 isqrt(u128 n)
{
    return static_cast<u64>(newton_isqrt<u128>(n));
}

std::optional<u64> exact_sqrt(u64 n)
{
    if (!maybe_square(n))
        return std::nullopt;
    u64 r = isqrt(n);
    if (r * r != n)
        return std::nullopt;
    return r;
}

std::optional<u64> exact_sqrt(u128 n)
{
    if (n <= std::numeric_limits<u64>::max())
        return exact_sqrt(static_cast<u64>(n));
    if (!maybe_square(n))
        return std::nullopt;
    u64 r = isqrt(n);
    if (static_cast<u128>(r) * r != n)
        return std::nullopt;
    return r;
}

std::optional<u64> mod_sqrt(i64 a, u64 q)
{
    if (q < 3 || !is_prime(q))
        throw DomainError("mod_sqrt: modulus must be an odd prime, got " + std::to_string(q));

    i64 const r = a % static_cast<i64>(q);
    u64 const x = static_cast<u64>(r < 0 ? r + static_cast<i64>(q) : r);
    if (x == 0)
        return u64(0);
    if (legendre(static_cast<i64>(x), q) != 1)
        return std::nullopt;

    // q - 1 = odd * 2^s
    u64 odd = q - 1;
    unsigned s = 0;
    while ((odd & 1) == 0) {
        odd >>= 1;
        ++s;
    }

    u64 root;
    if (s == 1) {
        root = powmod(x, (q + 1) / 4, q);
    } else {
        u64 z = 2;
        while (legendre(static_cast<i64>(z), q) != -1)
            ++z;
        u64 c = powmod(z, odd, q);
        root = powmod(x, (odd + 1) / 2, q);
        u64 t = powmod(x, odd, q);
        unsigned m = s;
        while (t != 1) {
            unsigned i = 0;
            u64 t2 = t;
            while (t2 != 1) {
                t2 = mulmod(t2, t2, q);
                ++i;
            }
            u64 b = c;
            for (unsigned j = 0; j + 1 < m - i; ++j)
                b = mulmod(b, b, q);
            root = mulmod(root, b, q);
            c = mulmod(b, b, q);
            t = mulmod(t, c, q);
            m = i;
        }
    }
    return std::min(root, q - root);
}

u128 checked_pow(u64 base, unsigned exp)
{
    u128 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<u128>::max() / base)
            throw DomainError("integer power " + std::to_string(base) + "^" + std::to_string(exp)
                              + " exceeds 128 bits");
        result *= base;
    }
    return result;
}

std::string to_string(u128 n)
{
    if (n == 0)
        return "0";
    std::string s;
    while (n) {
        s.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
        n /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace k2rank
