#ifndef K2RANK_REPORT_HPP
#define K2RANK_REPORT_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k2rank/classify.hpp"

namespace k2rank {

/* Omega(p) cut at limit, ascending. */
struct OmegaSet
{
    u64 p = 0;
    u64 limit = 0;
    std::vector<u64> members;
};

/*
 * Filters a prime table by l = 1 mod 8 and (l/p) = 1, and checks (p/l) = 1
 * on every member (InvariantViolation otherwise).
 */
OmegaSet enumerate_omega(u64 p, PrimeTable const & primes);
OmegaSet enumerate_omega(u64 p, u64 limit);

/*
 * table1 order: Omega_1..Omega_4 (upsilon = 1, 2; mu = 1, 2), then
 * Lambda_1..Lambda_4 (sigma = 0, 1; tau = 0, 1).
 * table2 order: I_1..I_8, following admissible_tuples.
 */
struct DensityCounts
{
    u64 omega = 0;
    std::array<u64, 8> table1{};
    std::array<u64, 8> table2{};

    void add(RankTuple const & t);
    DensityCounts & operator+=(DensityCounts const & o);
    bool operator==(DensityCounts const &) const = default;
};

inline constexpr std::array<char const *, 8> table1_names = {
    "omega1", "omega2", "omega3", "omega4", "lambda1", "lambda2", "lambda3", "lambda4",
};
inline constexpr std::array<char const *, 8> table2_names = {
    "i1", "i2", "i3", "i4", "i5", "i6", "i7", "i8",
};

struct DensityReport
{
    u64 p = 0;
    u64 limit = 0;
    DensityCounts counts;

    bool operator==(DensityReport const &) const = default;
};

/* round(10000 * count / total), halves rounded up; i.e. a percentage in hundredths */
u64 percent_hundredths(u64 count, u64 total);
/* 5001 -> "50.01" */
std::string format_percent(u64 hundredths);

struct TabulateOptions
{
    unsigned jobs = 1;
    FastPath fast_path = FastPath::off;
};

/*
 * Classifies every member in contiguous chunks, one per job. Output order
 * matches input order regardless of jobs. The first failing chunk's error
 * is rethrown.
 */
std::vector<ClassificationRecord> classify_all(OmegaContext const & ctx, std::span<const u64> members,
                                               TabulateOptions const & opts = {});

DensityReport tabulate(u64 p, u64 limit, TabulateOptions const & opts = {});
DensityReport tabulate(OmegaContext const & ctx, OmegaSet const & omega, TabulateOptions const & opts = {});

/* Cumulative counts over Omega intersected with [2, bound]. */
struct DensityRow
{
    u64 bound = 0;
    DensityCounts counts;

    /* table1 then table2 fractions of counts.omega; empty when omega is 0 */
    std::array<std::optional<double>, 16> fractions() const;
};

/* Rows at bound ceil(limit * k / checkpoints), k = 1..checkpoints. */
std::vector<DensityRow> density_series(u64 p, u64 limit, u64 checkpoints, TabulateOptions const & opts = {});

/* Names every broken sum identity; empty when the report is consistent. */
std::vector<std::string> consistency_violations(DensityReport const & report);
bool consistency_check(DensityReport const & report);
/* InvariantViolation naming the first broken identity */
void require_consistent(DensityReport const & report);

} // namespace k2rank

#endif /* K2RANK_REPORT_HPP */
