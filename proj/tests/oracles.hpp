#ifndef K2RANK_TESTS_ORACLES_HPP
#define K2RANK_TESTS_ORACLES_HPP

/*
 * Slow, obviously-correct reference computations for the tests. Nothing
 * here calls into the library.
 */

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<u64> primes_upto(u64 limit)
{
    std::vector<u64> out;
    for (u64 n = 2; n <= limit; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

/* Euler's criterion by repeated multiplication */
inline int euler_legendre(i64 a, u64 q)
{
    i64 r = a % static_cast<i64>(q);
    if (r < 0)
        r += static_cast<i64>(q);
    if (r == 0)
        return 0;
    u64 acc = 1;
    for (u64 i = 0; i < (q - 1) / 2; ++i)
        acc = acc * static_cast<u64>(r) % q;
    return acc == 1 ? 1 : -1;
}

/* Jacobi symbol (a/n), n odd positive, by factoring n with trial division */
inline int jacobi(i64 a, u64 n)
{
    int result = 1;
    u64 m = n;
    for (u64 q = 3; m > 1; q += 2) {
        while (m % q == 0) {
            result *= euler_legendre(a, q);
            m /= q;
        }
    }
    return result;
}

inline std::vector<u64> roots_mod(i64 a, u64 q)
{
    std::vector<u64> out;
    i64 r = a % static_cast<i64>(q);
    if (r < 0)
        r += static_cast<i64>(q);
    for (u64 x = 0; x < q; ++x)
        if (x * x % q == static_cast<u64>(r))
            out.push_back(x);
    return out;
}

struct Form
{
    i64 a, b, c;
    auto operator<=>(Form const &) const = default;
};

inline i64 disc(Form const & f)
{
    return f.b * f.b - 4 * f.a * f.c;
}

inline bool reduced(Form const & f)
{
    if (std::llabs(f.b) > f.a || f.a > f.c)
        return false;
    if ((std::llabs(f.b) == f.a || f.a == f.c) && f.b < 0)
        return false;
    return true;
}

/*
 * Every reduced primitive form of discriminant D, found by trying all
 * a <= |D| and b in [-a, a] without using the sqrt(|D|/3) bound.
 */
inline std::vector<Form> naive_reduced_forms(i64 D)
{
    std::vector<Form> out;
    for (i64 a = 1; a <= -D; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            i64 num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            Form f{a, b, num / (4 * a)};
            if (reduced(f) && std::gcd(std::gcd(f.a, f.b), f.c) == 1)
                out.push_back(f);
        }
    }
    return out;
}

/* Analytic class number formula, fundamental D < -4 with D = 0 mod 8. */
inline i64 dirichlet_class_number_even(i64 D)
{
    i64 const n = -D;
    i64 sum = 0;
    for (i64 a = 1; a < n; a += 2)
        sum += jacobi(D, static_cast<u64>(a)) * a;
    return -sum / n;
}

/* One-step-at-a-time Lagrange reduction. */
inline Form slow_reduce(Form f)
{
    for (;;) {
        if (f.b > f.a) {
            // (a, b, c) -> (a, b - 2a, a - b + c)
            f = {f.a, f.b - 2 * f.a, f.a - f.b + f.c};
        } else if (f.b <= -f.a) {
            f = {f.a, f.b + 2 * f.a, f.a + f.b + f.c};
        } else if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
        } else {
            break;
        }
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

/* f transformed by [[x, z], [y, w]] with det 1 */
inline Form transform(Form const & f, i64 x, i64 y, i64 z, i64 w)
{
    return {f.a * x * x + f.b * x * y + f.c * y * y,
            2 * f.a * x * z + f.b * (x * w + y * z) + 2 * f.c * y * w,
            f.a * z * z + f.b * z * w + f.c * w * w};
}

/* an equivalent form whose first coefficient is coprime to m */
inline Form with_first_coprime(Form const & f, i64 m)
{
    for (i64 x = 0; x < 50; ++x) {
        for (i64 y = 0; y < 50; ++y) {
            if (std::gcd(x, y) != 1)
                continue;
            i64 v = f.a * x * x + f.b * x * y + f.c * y * y;
            if (std::gcd(v, m) != 1)
                continue;
            // complete (x, y) to a det-1 matrix
            for (i64 z = -50; z <= 50; ++z)
                for (i64 w = -50; w <= 50; ++w)
                    if (x * w - y * z == 1)
                        return transform(f, x, y, z, w);
        }
    }
    std::abort();
}

/*
 * Composition through united forms: move to (a1, B, *), (a2, B, *) with
 * gcd(a1, a2) = 1 and compose to (a1 a2, B, *).
 */
inline Form united_compose(Form f, Form g)
{
    i64 const D = disc(f);
    f = with_first_coprime(f, 2 * D);
    g = with_first_coprime(g, 2 * D * f.a);
    i64 const A = f.a * g.a;
    for (i64 B = 0; B < 2 * A; ++B) {
        if ((B - f.b) % (2 * f.a) != 0 || (B - g.b) % (2 * g.a) != 0)
            continue;
        if ((B * B - D) % (4 * A) != 0)
            continue;
        return slow_reduce({A, B, (B * B - D) / (4 * A)});
    }
    std::abort();
}

/* all (n, m) with s n^2 + t m^2 = N, n >= 0, m >= 1, by a double loop */
inline std::vector<std::pair<u64, u64>> all_representations(u64 N, u64 s, u64 t)
{
    std::vector<std::pair<u64, u64>> out;
    for (u64 m = 1; t * m * m <= N; ++m)
        for (u64 n = 0; s * n * n + t * m * m <= N; ++n)
            if (s * n * n + t * m * m == N)
                out.emplace_back(n, m);
    return out;
}

} // namespace oracle

#endif
