#include "k2rank/qforms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "k2rank/errors.hpp"

namespace k2rank {

namespace {

i128 floor_mod(i128 x, i128 m)
{
    i128 r = x % m;
    return r < 0 ? r + m : r;
}

struct Xgcd
{
    i128 u, v, d;
};

/* u x + v y = d = gcd(x, y), d >= 0 */
Xgcd xgcd(i128 x, i128 y)
{
    i128 old_r = x, r = y;
    i128 old_u = 1, u = 0;
    i128 old_v = 0, v = 1;
    while (r != 0) {
        i128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_u -= q * u;
        std::swap(old_u, u);
        old_v -= q * v;
        std::swap(old_v, v);
    }
    if (old_r < 0)
        return {-old_u, -old_v, -old_r};
    return {old_u, old_v, old_r};
}

std::string form_str(QuadForm const & f)
{
    return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

void require_definite(QuadForm const & f, char const * who)
{
    if (!f.is_positive_definite())
        throw DomainError(std::string(who) + ": form " + form_str(f) + " is not positive definite");
}

template <typename U>
std::optional<RepWitness> scan(U N, u64 s, u64 t, std::optional<u64> forbidden)
{
    U const tt = t;
    U tm2 = tt; // t m^2 for m = 1
    for (u64 m = 1; tm2 <= N; ++m) {
        if (!forbidden || m % *forbidden != 0) {
            U const rest = N - tm2;
            if (s == 1) {
                if (auto n = exact_sqrt(rest))
                    return RepWitness{*n, m};
            } else if (rest % s == 0) {
                if (auto n = exact_sqrt(static_cast<U>(rest / s)))
                    return RepWitness{*n, m};
            }
        }
        U const step = tt * (2 * static_cast<U>(m) + 1);
        if (step > N - tm2)
            break;
        tm2 += step;
    }
    return std::nullopt;
}

} // namespace

bool QuadForm::is_primitive() const
{
    return std::gcd(std::gcd(a, b), c) == 1;
}

bool QuadForm::is_reduced() const
{
    i64 const ab = b < 0 ? -b : b;
    if (!(ab <= a && a <= c))
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

std::ostream & operator<<(std::ostream & o, QuadForm const & f)
{
    return o << form_str(f);
}

QuadForm principal_form(i64 disc)
{
    if (disc >= 0 || (disc & 3) > 1)
        throw DomainError("invalid negative discriminant " + std::to_string(disc));
    if ((disc & 3) == 0)
        return {1, 0, -disc / 4};
    return {1, 1, (1 - disc) / 4};
}

QuadForm reduce(QuadForm f)
{
    require_definite(f, "reduce");
    i128 const disc = i128(f.b) * f.b - i128(4) * f.a * f.c;
    i128 a = f.a, b = f.b, c = f.c;

    // b into (-a, a], c recomputed from the discriminant
    auto normalize = [&] {
        i128 r = floor_mod(b, 2 * a);
        if (r > a)
            r -= 2 * a;
        b = r;
        c = (b * b - disc) / (4 * a);
    };

    normalize();
    while (a > c) {
        std::swap(a, c);
        b = -b;
        normalize();
    }
    if (a == c && b < 0)
        b = -b;
    return {static_cast<i64>(a), static_cast<i64>(b), static_cast<i64>(c)};
}

QuadForm compose(QuadForm const & f, QuadForm const & g)
{
    require_definite(f, "compose");
    require_definite(g, "compose");
    i64 const disc = f.discriminant();
    if (disc != g.discriminant())
        throw DomainError("compose: discriminant mismatch " + std::to_string(disc) + " vs "
                          + std::to_string(g.discriminant()));

    QuadForm f1 = f, f2 = g;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    i128 const a1 = f1.a, b1 = f1.b;
    i128 const a2 = f2.a, b2 = f2.b, c2 = f2.c;

    i128 const s = (b1 + b2) / 2;
    i128 const n = b2 - s;

    i128 y1, d;
    if (a2 % a1 == 0) {
        y1 = 0;
        d = a1;
    } else {
        auto e = xgcd(a2, a1);
        y1 = e.u;
        d = e.d;
    }

    i128 x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        auto e = xgcd(s, d);
        x2 = e.u;
        y2 = -e.v;
        d1 = e.d;
    }

    i128 const v1 = a1 / d1;
    i128 const v2 = a2 / d1;
    i128 const r = floor_mod(y1 * y2 * n - x2 * c2, v1);
    i128 const b3 = b2 + 2 * v2 * r;
    i128 const a3 = v1 * v2;
    i128 const c3 = (b3 * b3 - disc) / (4 * a3);
    return reduce({static_cast<i64>(a3), static_cast<i64>(b3), static_cast<i64>(c3)});
}

QuadForm power_class(QuadForm const & f, u64 k)
{
    require_definite(f, "power_class");
    QuadForm result = principal_form(f.discriminant());
    QuadForm base = reduce(f);
    while (k) {
        if (k & 1)
            result = compose(result, base);
        base = compose(base, base);
        k >>= 1;
    }
    return result;
}

bool ClassGroup::contains(QuadForm const & f) const
{
    if (f.discriminant() != disc_)
        return false;
    return std::find(forms_.begin(), forms_.end(), reduce(f)) != forms_.end();
}

ClassGroup enumerate_class_group(i64 disc)
{
    // validates disc
    (void)principal_form(disc);

    std::vector<QuadForm> forms;
    i64 const parity = disc & 1;
    for (i64 a = 1; 3 * a * a <= -disc; ++a) {
        // |b| ascending, positive first: 0, 2, -2, ... or 1, -1, 3, -3, ...
        for (i64 ab = parity; ab <= a; ab += 2) {
            for (int sign = 1; sign >= (ab == 0 ? 1 : -1); sign -= 2) {
                i64 const b = sign * ab;
                i64 const num = b * b - disc;
                if (num % (4 * a) != 0)
                    continue;
                QuadForm const f{a, b, num / (4 * a)};
                if (f.is_reduced() && f.is_primitive())
                    forms.push_back(f);
            }
        }
    }
    return ClassGroup(disc, std::move(forms));
}

QuadForm form_above(u64 l, i64 disc)
{
    if (l < 3 || !is_prime(l))
        throw DomainError("form_above: " + std::to_string(l) + " is not an odd prime");
    (void)principal_form(disc);
    if (legendre(disc, l) != 1)
        throw DomainError("form_above: discriminant " + std::to_string(disc)
                          + " is not a nonzero square mod " + std::to_string(l));

    u64 const r = *mod_sqrt(disc, l);
    u64 const parity = static_cast<u64>(disc & 1);
    u64 best = 2 * l;
    for (u64 cand : {r, l - r, r + l, 2 * l - r}) {
        if (cand < 2 * l && (cand & 1) == parity)
            best = std::min(best, cand);
    }
    i128 const b = best;
    i128 const num = b * b - disc;
    if (best >= 2 * l || num % (4 * i128(l)) != 0)
        throw InvariantViolation("form_above: no square root of " + std::to_string(disc) + " mod 4*"
                                 + std::to_string(l));
    return reduce({static_cast<i64>(l), static_cast<i64>(b), static_cast<i64>(num / (4 * i128(l)))});
}

std::optional<RepWitness> diag_representation(u128 N, u64 s, u64 t, std::optional<u64> forbidden_modulus)
{
    if (N == 0 || s == 0 || t == 0)
        throw DomainError("diag_representation: N, s, t must be positive");
    if (forbidden_modulus && *forbidden_modulus == 0)
        throw DomainError("diag_representation: forbidden modulus must be positive");
    if (N <= ~u64(0) / 4)
        return scan<u64>(static_cast<u64>(N), s, t, forbidden_modulus);
    if (N > ~u128(0) / 4)
        throw DomainError("diag_representation: N = " + to_string(N) + " is too large");
    return scan<u128>(N, s, t, forbidden_modulus);
}

} // namespace k2rank
