#include "k2rank/criteria.hpp"

#include <string>

#include "k2rank/errors.hpp"

namespace k2rank {

namespace {

std::string quartic_mismatch(u64 l, u64 p, char const * what, std::string_view brute, std::string_view fast)
{
    return "fast path disagrees with brute force on " + std::string(what) + " for l = "
           + std::to_string(l) + ", p = " + std::to_string(p) + ": brute " + std::string(brute)
           + ", fast " + std::string(fast);
}

u64 require_admissible(u64 p)
{
    if (!is_admissible_p(p))
        throw DomainError("p = " + std::to_string(p) + " is not a prime = 7 mod 8");
    return p;
}

} // namespace

std::string_view to_string(Quartic q)
{
    return q == Quartic::sat_1_2p ? "1_2p" : "2_p";
}

std::string_view to_string(FastPath mode)
{
    switch (mode) {
    case FastPath::off:
        return "off";
    case FastPath::on:
        return "on";
    case FastPath::verify:
        return "verify";
    }
    return "?";
}

bool is_admissible_p(u64 p)
{
    return p % 8 == 7 && is_prime(p);
}

bool in_omega(u64 l, u64 p)
{
    if (l % 8 != 1 || l == p || !is_prime(l))
        return false;
    return legendre(static_cast<i64>(l % p), p) == 1 && legendre(static_cast<i64>(p % l), l) == 1;
}

ConditionResult satisfies_1_32(u64 l)
{
    if (l % 8 != 1)
        throw DomainError("satisfies_1_32: l = " + std::to_string(l) + " is not 1 mod 8");
    auto w = diag_representation(l, 1, 32);
    return {w.has_value(), w};
}

QuarticResult quartic_condition(u64 l, u64 p, ClassGroup const & cg)
{
    if (cg.h() % 4 != 0)
        throw InvariantViolation("class number h(" + std::to_string(cg.disc()) + ") = "
                                 + std::to_string(cg.h()) + " is not divisible by 4");
    u128 const N = checked_pow(l, static_cast<unsigned>(cg.h() / 4));
    auto principal = diag_representation(N, 1, 2 * p, l);
    auto ambiguous = diag_representation(N, 2, p, l);
    if (principal.has_value() == ambiguous.has_value())
        throw InvariantViolation("l = " + std::to_string(l) + ", p = " + std::to_string(p) + ": "
                                 + (principal ? "both" : "neither")
                                 + " of <1,2p> and <2,p> hold");
    if (principal)
        return {Quartic::sat_1_2p, principal};
    return {Quartic::sat_2_p, ambiguous};
}

SatisfactionProfile profile(u64 l, u64 p, ClassGroup const & cg)
{
    if (!is_admissible_p(p))
        throw DomainError("p = " + std::to_string(p) + " is not a prime = 7 mod 8");
    if (!in_omega(l, p))
        throw DomainError("l not in Omega(p): l = " + std::to_string(l) + ", p = " + std::to_string(p));
    if (cg.disc() != -8 * static_cast<i64>(p))
        throw DomainError("profile: class group has discriminant " + std::to_string(cg.disc())
                          + ", expected " + std::to_string(-8 * static_cast<i64>(p)));

    SatisfactionProfile out;
    out.l = l;
    out.p = p;
    auto c = satisfies_1_32(l);
    out.sat_1_32 = c.holds;
    out.witness_1_32 = c.witness;
    auto q = quartic_condition(l, p, cg);
    out.quartic = q.label;
    out.quartic_witness = q.witness;
    out.residue16 = static_cast<unsigned>(l % 16);
    return out;
}

OmegaContext::OmegaContext(u64 p)
    : p_(require_admissible(p)),
      quartic_group_(enumerate_class_group(-8 * static_cast<i64>(p))),
      group128_(enumerate_class_group(-128)),
      ambiguous_(reduce({2, 0, static_cast<i64>(p)}))
{
    if (quartic_group_.h() % 4 != 0)
        throw InvariantViolation("class number h(" + std::to_string(quartic_group_.disc())
                                 + ") = " + std::to_string(quartic_group_.h())
                                 + " is not divisible by 4");
}

bool OmegaContext::fast_1_32(u64 l) const
{
    return form_above(l, -128) == group128_.principal();
}

Quartic OmegaContext::fast_quartic(u64 l) const
{
    QuadForm const g = power_class(form_above(l, quartic_group_.disc()), exponent());
    if (g == quartic_group_.principal())
        return Quartic::sat_1_2p;
    if (g == ambiguous_)
        return Quartic::sat_2_p;
    throw InvariantViolation("l = " + std::to_string(l) + ": class power is neither principal nor (2,0,p)");
}

SatisfactionProfile OmegaContext::profile(u64 l, FastPath mode) const
{
    if (mode == FastPath::off)
        return k2rank::profile(l, p_, quartic_group_);

    if (!in_omega(l, p_))
        throw DomainError("l not in Omega(p): l = " + std::to_string(l) + ", p = " + std::to_string(p_));

    bool const sat = fast_1_32(l);
    Quartic const quartic = fast_quartic(l);
    if (mode == FastPath::on) {
        SatisfactionProfile out;
        out.l = l;
        out.p = p_;
        out.sat_1_32 = sat;
        out.quartic = quartic;
        out.residue16 = static_cast<unsigned>(l % 16);
        return out;
    }

    auto out = k2rank::profile(l, p_, quartic_group_);
    if (out.sat_1_32 != sat)
        throw InvariantViolation(quartic_mismatch(l, p_, "<1,32>", out.sat_1_32 ? "yes" : "no",
                                                  sat ? "yes" : "no"));
    if (out.quartic != quartic)
        throw InvariantViolation(
            quartic_mismatch(l, p_, "<1,2p>/<2,p>", to_string(out.quartic), to_string(quartic)));
    return out;
}

SplitGenerator split_generator(u64 p, u64 max_b)
{
    if (!is_admissible_p(p))
        throw DomainError("split_generator: p = " + std::to_string(p) + " is not a prime = 7 mod 8");
    for (u64 b = 1; b <= max_b; ++b) {
        u128 const twice = u128(2) * b * b;
        if (twice < p)
            continue;
        if (auto a = exact_sqrt(twice - p))
            return {static_cast<i64>(*a), b};
    }
    throw NotFoundError("split_generator: no solution of a^2 - 2b^2 = -" + std::to_string(p)
                        + " with b <= " + std::to_string(max_b));
}

} // namespace k2rank
