#include "k2rank/report.hpp"

#include <exception>
#include <thread>

#include "k2rank/errors.hpp"

namespace k2rank {

namespace {

/* Runs fn(begin, end, chunk) over `jobs` contiguous slices of [0, n). */
template <typename Fn> void for_each_chunk(std::size_t n, unsigned jobs, Fn fn)
{
    std::size_t const chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
    std::vector<std::exception_ptr> errors(chunks);
    auto body = [&](std::size_t k) {
        try {
            fn(n * k / chunks, n * (k + 1) / chunks, k);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };
    if (chunks == 1) {
        body(0);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(chunks);
        for (std::size_t k = 0; k < chunks; ++k)
            workers.emplace_back(body, k);
    }
    for (auto const & e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace

OmegaSet enumerate_omega(u64 p, PrimeTable const & primes)
{
    if (!is_admissible_p(p))
        throw DomainError("p = " + std::to_string(p) + " is not a prime = 7 mod 8");
    OmegaSet out{p, primes.limit(), {}};
    for (u64 l : primes.primes()) {
        if (l % 8 != 1 || legendre(static_cast<i64>(l % p), p) != 1)
            continue;
        if (legendre(static_cast<i64>(p % l), l) != 1)
            throw InvariantViolation("reciprocity check failed: (" + std::to_string(l) + "/"
                                     + std::to_string(p) + ") = 1 but (" + std::to_string(p) + "/"
                                     + std::to_string(l) + ") != 1");
        out.members.push_back(l);
    }
    return out;
}

OmegaSet enumerate_omega(u64 p, u64 limit)
{
    if (!is_admissible_p(p))
        throw DomainError("p = " + std::to_string(p) + " is not a prime = 7 mod 8");
    return enumerate_omega(p, sieve_primes(limit));
}

void DensityCounts::add(RankTuple const & t)
{
    auto idx = tuple_index(t);
    if (!idx)
        throw InvariantViolation("inadmissible rank tuple");
    ++omega;
    ++table1[t.upsilon == 1 ? 0 : 1];
    ++table1[t.mu == 1 ? 2 : 3];
    ++table1[t.sigma == 0 ? 4 : 5];
    ++table1[t.tau == 0 ? 6 : 7];
    ++table2[*idx];
}

DensityCounts & DensityCounts::operator+=(DensityCounts const & o)
{
    omega += o.omega;
    for (std::size_t i = 0; i < 8; ++i) {
        table1[i] += o.table1[i];
        table2[i] += o.table2[i];
    }
    return *this;
}

u64 percent_hundredths(u64 count, u64 total)
{
    if (total == 0)
        throw DomainError("percentage of an empty set");
    return static_cast<u64>((u128(count) * 20000 + total) / (u128(2) * total));
}

std::string format_percent(u64 hundredths)
{
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2)
        frac.insert(0, "0");
    return std::to_string(hundredths / 100) + "." + frac;
}

std::vector<ClassificationRecord> classify_all(OmegaContext const & ctx, std::span<const u64> members,
                                               TabulateOptions const & opts)
{
    std::vector<ClassificationRecord> out(members.size());
    for_each_chunk(members.size(), opts.jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end; ++i)
            out[i] = classify(members[i], ctx, opts.fast_path);
    });
    return out;
}

DensityReport tabulate(OmegaContext const & ctx, OmegaSet const & omega, TabulateOptions const & opts)
{
    if (omega.p != ctx.p())
        throw DomainError("tabulate: Omega set and context disagree on p");
    std::size_t const chunks = std::max<std::size_t>(1, std::min<std::size_t>(opts.jobs, omega.members.size()));
    std::vector<DensityCounts> partial(chunks);
    for_each_chunk(omega.members.size(), opts.jobs, [&](std::size_t begin, std::size_t end, std::size_t k) {
        for (std::size_t i = begin; i < end; ++i)
            partial[k].add(classify(omega.members[i], ctx, opts.fast_path).tuple);
    });

    DensityReport report{ctx.p(), omega.limit, {}};
    for (auto const & c : partial)
        report.counts += c;
    return report;
}

DensityReport tabulate(u64 p, u64 limit, TabulateOptions const & opts)
{
    OmegaContext const ctx(p);
    return tabulate(ctx, enumerate_omega(p, limit), opts);
}

std::array<std::optional<double>, 16> DensityRow::fractions() const
{
    std::array<std::optional<double>, 16> out{};
    if (counts.omega == 0)
        return out;
    double const total = static_cast<double>(counts.omega);
    for (std::size_t i = 0; i < 8; ++i) {
        out[i] = static_cast<double>(counts.table1[i]) / total;
        out[8 + i] = static_cast<double>(counts.table2[i]) / total;
    }
    return out;
}

std::vector<DensityRow> density_series(u64 p, u64 limit, u64 checkpoints, TabulateOptions const & opts)
{
    if (checkpoints == 0)
        throw DomainError("density_series: checkpoints must be >= 1");
    OmegaContext const ctx(p);
    auto const omega = enumerate_omega(p, limit);
    auto const records = classify_all(ctx, omega.members, opts);

    std::vector<DensityRow> rows;
    rows.reserve(checkpoints);
    DensityCounts running;
    std::size_t next = 0;
    for (u64 k = 1; k <= checkpoints; ++k) {
        u64 const bound = static_cast<u64>((u128(limit) * k + checkpoints - 1) / checkpoints);
        while (next < records.size() && records[next].l <= bound)
            running.add(records[next++].tuple);
        rows.push_back({bound, running});
    }
    return rows;
}

std::vector<std::string> consistency_violations(DensityReport const & report)
{
    auto const & c = report.counts;
    auto const & t1 = c.table1;
    auto const & t2 = c.table2;
    std::vector<std::string> bad;
    auto expect = [&](char const * identity, u64 lhs, u64 rhs) {
        if (lhs != rhs)
            bad.push_back(std::string(identity) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
    };

    expect("omega1 + omega2 = omega", t1[0] + t1[1], c.omega);
    expect("omega3 + omega4 = omega", t1[2] + t1[3], c.omega);
    expect("lambda1 + lambda2 = omega", t1[4] + t1[5], c.omega);
    expect("lambda3 + lambda4 = omega", t1[6] + t1[7], c.omega);
    u64 sum = 0;
    for (u64 v : t2)
        sum += v;
    expect("i1 + ... + i8 = omega", sum, c.omega);

    // Table 1 marginals from the tuple list
    expect("omega1 = i1 + i2 + i5 + i6", t1[0], t2[0] + t2[1] + t2[4] + t2[5]);
    expect("omega3 = i1 + i2 + i3 + i4", t1[2], t2[0] + t2[1] + t2[2] + t2[3]);
    expect("lambda1 = i1 + i4 + i6 + i7", t1[4], t2[0] + t2[3] + t2[5] + t2[6]);
    expect("lambda3 = i1 + i3 + i5 + i7", t1[6], t2[0] + t2[2] + t2[4] + t2[6]);
    return bad;
}

bool consistency_check(DensityReport const & report)
{
    return consistency_violations(report).empty();
}

void require_consistent(DensityReport const & report)
{
    auto bad = consistency_violations(report);
    if (!bad.empty())
        throw InvariantViolation("consistency check failed for p = " + std::to_string(report.p)
                                 + ", limit = " + std::to_string(report.limit) + ": " + bad.front());
}

} // namespace k2rank
