#include "k2rank/classify.hpp"

#include <algorithm>
#include <string>

#include "k2rank/errors.hpp"

namespace k2rank {

namespace {

struct CaseRow
{
    bool sat_1_32;
    Quartic quartic;
    unsigned residue16;
    SplittingCase label;
    RankTuple tuple;
    std::string_view name;
};

// clang-format off
constexpr std::array<CaseRow, 8> case_table = {{
    {true,  Quartic::sat_1_2p, 1, SplittingCase::case_i,    {2, 2, 1, 1}, "I"},
    {true,  Quartic::sat_2_p,  9, SplittingCase::case_ii_1, {1, 2, 0, 1}, "II.1"},
    {true,  Quartic::sat_1_2p, 9, SplittingCase::case_ii_2, {2, 1, 1, 0}, "II.2"},
    {false, Quartic::sat_1_2p, 9, SplittingCase::case_ii_3, {2, 1, 0, 1}, "II.3"},
    {false, Quartic::sat_1_2p, 1, SplittingCase::case_ii_4, {2, 2, 0, 0}, "II.4"},
    {true,  Quartic::sat_2_p,  1, SplittingCase::case_ii_5, {1, 1, 0, 0}, "II.5"},
    {false, Quartic::sat_2_p,  1, SplittingCase::case_ii_6, {1, 1, 1, 1}, "II.6"},
    {false, Quartic::sat_2_p,  9, SplittingCase::case_ii_7, {1, 2, 1, 0}, "II.7"},
}};
// clang-format on

CaseRow const & row(SplittingCase c)
{
    return case_table[static_cast<std::size_t>(c)];
}

} // namespace

std::string_view to_string(SplittingCase c)
{
    return row(c).name;
}

std::optional<SplittingCase> parse_case(std::string_view s)
{
    for (auto const & r : case_table)
        if (r.name == s)
            return r.label;
    return std::nullopt;
}

std::ostream & operator<<(std::ostream & o, RankTuple const & t)
{
    return o << "(" << t.upsilon << "," << t.mu << "," << t.sigma << "," << t.tau << ")";
}

std::optional<std::size_t> tuple_index(RankTuple const & t)
{
    auto it = std::find(admissible_tuples.begin(), admissible_tuples.end(), t);
    if (it == admissible_tuples.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - admissible_tuples.begin());
}

SplittingCase case_of(bool sat_1_32, Quartic quartic, unsigned residue16)
{
    if (residue16 != 1 && residue16 != 9)
        throw DomainError("case_of: l mod 16 must be 1 or 9, got " + std::to_string(residue16));
    for (auto const & r : case_table)
        if (r.sat_1_32 == sat_1_32 && r.quartic == quartic && r.residue16 == residue16)
            return r.label;
    throw InvariantViolation("case_of: profile cell missing from table");
}

SplittingCase case_of(SatisfactionProfile const & profile)
{
    return case_of(profile.sat_1_32, profile.quartic, profile.residue16);
}

RankTuple tuple_of(SplittingCase c)
{
    return row(c).tuple;
}

namespace {

ClassificationRecord assemble(SatisfactionProfile profile)
{
    ClassificationRecord rec;
    rec.l = profile.l;
    rec.p = profile.p;
    rec.splitting_case = case_of(profile);
    rec.tuple = tuple_of(rec.splitting_case);
    rec.profile = std::move(profile);
    return rec;
}

} // namespace

ClassificationRecord classify(u64 l, u64 p, ClassGroup const & cg)
{
    return assemble(profile(l, p, cg));
}

ClassificationRecord classify(u64 l, OmegaContext const & ctx, FastPath mode)
{
    return assemble(ctx.profile(l, mode));
}

} // namespace k2rank
