#ifndef K2RANK_QFORMS_HPP
#define K2RANK_QFORMS_HPP

#include <compare>
#include <optional>
#include <ostream>
#include <vector>

#include "k2rank/arith.hpp"

namespace k2rank {

/*
 * The binary quadratic form a X^2 + b XY + c Y^2. Construction does not
 * validate; the operations below check positive definiteness where they
 * need it.
 */
struct QuadForm
{
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    i64 discriminant() const { return b * b - 4 * a * c; }
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
    bool is_primitive() const;
    /* |b| <= a <= c, and b >= 0 if |b| == a or a == c */
    bool is_reduced() const;

    /* value at (x, y) */
    i128 operator()(i64 x, i64 y) const
    {
        return i128(a) * x * x + i128(b) * x * y + i128(c) * y * y;
    }

    auto operator<=>(QuadForm const &) const = default;
};

std::ostream & operator<<(std::ostream & o, QuadForm const & f);

/* (1, 0, -disc/4) or (1, 1, (1-disc)/4) */
QuadForm principal_form(i64 disc);

/* Unique reduced form in the SL2(Z) class of f. */
QuadForm reduce(QuadForm f);

/* Reduced representative of the product class (Dirichlet composition). */
QuadForm compose(QuadForm const & f, QuadForm const & g);

/* f^k in the class group, reduced; k == 0 gives the principal form. */
QuadForm power_class(QuadForm const & f, u64 k);

/*
 * Reduced representatives of every class of primitive positive definite
 * forms of a negative discriminant.
 */
class ClassGroup
{
    i64 disc_;
    std::vector<QuadForm> forms_;

    public:
    ClassGroup(i64 disc, std::vector<QuadForm> forms)
        : disc_(disc), forms_(std::move(forms))
    {
    }

    i64 disc() const { return disc_; }
    std::vector<QuadForm> const & forms() const { return forms_; }
    u64 h() const { return forms_.size(); }
    QuadForm principal() const { return principal_form(disc_); }
    bool contains(QuadForm const & f) const;
};

/* DomainError unless disc < 0 and disc = 0, 1 mod 4. */
ClassGroup enumerate_class_group(i64 disc);

/*
 * The reduced class of (l, b, (b^2 - disc)/4l), with b the least
 * non-negative b of the parity of disc satisfying b^2 = disc mod 4l.
 * DomainError unless l is an odd prime not dividing disc and disc is a
 * square mod l.
 */
QuadForm form_above(u64 l, i64 disc);

/* s n^2 + t m^2 = N */
struct RepWitness
{
    u64 n = 0;
    u64 m = 0;

    bool operator==(RepWitness const &) const = default;
};

/*
 * First (n, m), m = 1, 2, ... with s n^2 + t m^2 = N, skipping m divisible
 * by forbidden_modulus when one is given. Exhaustive: an empty result
 * means no such representation exists.
 */
std::optional<RepWitness> diag_representation(u128 N, u64 s, u64 t,
                                              std::optional<u64> forbidden_modulus = std::nullopt);

} // namespace k2rank

#endif /* K2RANK_QFORMS_HPP */
