#ifndef K2RANK_CRITERIA_HPP
#define K2RANK_CRITERIA_HPP

#include <optional>
#include <string_view>

#include "k2rank/arith.hpp"
#include "k2rank/qforms.hpp"

namespace k2rank {

/* Which of X^2 + 2pY^2, 2X^2 + pY^2 represents l^(h/4) with m != 0 mod l. */
enum class Quartic
{
    sat_1_2p,
    sat_2_p,
};

std::string_view to_string(Quartic q);

/*
 * How the representation conditions are decided. `off` runs the literal
 * brute-force scans, `on` decides them in the class group, `verify` does
 * both and throws InvariantViolation on any disagreement.
 */
enum class FastPath
{
    off,
    on,
    verify,
};

std::string_view to_string(FastPath mode);

struct ConditionResult
{
    bool holds = false;
    std::optional<RepWitness> witness;
};

struct QuarticResult
{
    Quartic label = Quartic::sat_1_2p;
    std::optional<RepWitness> witness;
};

struct SatisfactionProfile
{
    u64 l = 0;
    u64 p = 0;
    bool sat_1_32 = false;
    std::optional<RepWitness> witness_1_32; // (x, y) with l = x^2 + 32 y^2
    Quartic quartic = Quartic::sat_1_2p;
    std::optional<RepWitness> quartic_witness; // (n, m) for the holding form
    unsigned residue16 = 0;                    // l mod 16, 1 or 9

    bool operator==(SatisfactionProfile const &) const = default;
};

/* a^2 - 2 b^2 = -p */
struct SplitGenerator
{
    i64 a = 0;
    u64 b = 0;

    bool operator==(SplitGenerator const &) const = default;
};

/* p prime, p = 7 mod 8 */
bool is_admissible_p(u64 p);

/* l prime, l = 1 mod 8, (l/p) = (p/l) = 1 */
bool in_omega(u64 l, u64 p);

/* l = x^2 + 32 y^2; DomainError unless l = 1 mod 8 */
ConditionResult satisfies_1_32(u64 l);

/*
 * Runs both scans on N = l^(h/4): X^2 + 2pY^2 and 2X^2 + pY^2, each with
 * m != 0 mod l. Exactly one must succeed; InvariantViolation otherwise,
 * or when h is not divisible by 4.
 */
QuarticResult quartic_condition(u64 l, u64 p, ClassGroup const & cg);

/* Brute-force profile; DomainError unless l is in Omega(p). */
SatisfactionProfile profile(u64 l, u64 p, ClassGroup const & cg);

/*
 * Per-p state shared by every classification: the class groups of
 * discriminants -8p and -128 and the exponent h(-8p)/4.
 */
class OmegaContext
{
    u64 p_;
    ClassGroup quartic_group_;
    ClassGroup group128_;
    QuadForm ambiguous_; // reduced (2, 0, p)

    public:
    /* DomainError if p is not admissible, InvariantViolation if 4 does not divide h(-8p). */
    explicit OmegaContext(u64 p);

    u64 p() const { return p_; }
    ClassGroup const & quartic_group() const { return quartic_group_; }
    ClassGroup const & group128() const { return group128_; }
    u64 exponent() const { return quartic_group_.h() / 4; }

    bool contains(u64 l) const { return in_omega(l, p_); }

    bool fast_1_32(u64 l) const;
    Quartic fast_quartic(u64 l) const;

    SatisfactionProfile profile(u64 l, FastPath mode = FastPath::off) const;
};

/* Least b >= 1 with 2b^2 - p a square. NotFoundError past max_b. */
SplitGenerator split_generator(u64 p, u64 max_b = 1000000);

} // namespace k2rank

#endif /* K2RANK_CRITERIA_HPP */
