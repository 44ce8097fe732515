#ifndef K2RANK_CLASSIFY_HPP
#define K2RANK_CLASSIFY_HPP

#include <array>
#include <optional>
#include <ostream>
#include <string_view>

#include "k2rank/criteria.hpp"

namespace k2rank {

/*
 * The eight Frobenius classes of l in the central subgroup of order 8.
 * case_i is the split class: <1,32>, <1,2p> and l = 1 mod 16 all hold.
 * The cells of the other seven are listed in classify.cpp.
 */
enum class SplittingCase
{
    case_i,
    case_ii_1,
    case_ii_2,
    case_ii_3,
    case_ii_4,
    case_ii_5,
    case_ii_6,
    case_ii_7,
};

inline constexpr std::array<SplittingCase, 8> all_cases = {
    SplittingCase::case_i,    SplittingCase::case_ii_1, SplittingCase::case_ii_2,
    SplittingCase::case_ii_3, SplittingCase::case_ii_4, SplittingCase::case_ii_5,
    SplittingCase::case_ii_6, SplittingCase::case_ii_7,
};

/* "I", "II.1", ..., "II.7" */
std::string_view to_string(SplittingCase c);
std::optional<SplittingCase> parse_case(std::string_view s);

/* 4-ranks of K2 of the rings of integers of Q(sqrt(pl)), Q(sqrt(2pl)), Q(sqrt(-pl)), Q(sqrt(-2pl)). */
struct RankTuple
{
    int upsilon = 0;
    int mu = 0;
    int sigma = 0;
    int tau = 0;

    auto operator<=>(RankTuple const &) const = default;
};

std::ostream & operator<<(std::ostream & o, RankTuple const & t);

/* The admissible tuples in table order: index j holds the tuple of I_{j+1}. */
inline constexpr std::array<RankTuple, 8> admissible_tuples = {{
    {1, 1, 0, 0},
    {1, 1, 1, 1},
    {2, 1, 1, 0},
    {2, 1, 0, 1},
    {1, 2, 1, 0},
    {1, 2, 0, 1},
    {2, 2, 0, 0},
    {2, 2, 1, 1},
}};

/* position of t in admissible_tuples, if any */
std::optional<std::size_t> tuple_index(RankTuple const & t);

SplittingCase case_of(bool sat_1_32, Quartic quartic, unsigned residue16);
SplittingCase case_of(SatisfactionProfile const & profile);

RankTuple tuple_of(SplittingCase c);

struct ClassificationRecord
{
    u64 l = 0;
    u64 p = 0;
    SatisfactionProfile profile;
    SplittingCase splitting_case = SplittingCase::case_i;
    RankTuple tuple;
};

ClassificationRecord classify(u64 l, u64 p, ClassGroup const & cg);
ClassificationRecord classify(u64 l, OmegaContext const & ctx, FastPath mode = FastPath::off);

} // namespace k2rank

#endif /* K2RANK_CLASSIFY_HPP */
