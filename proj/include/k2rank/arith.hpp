#ifndef K2RANK_ARITH_HPP
#define K2RANK_ARITH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace k2rank {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/* All primes up to a limit, ascending. Immutable once built. */
class PrimeTable
{
    u64 limit_;
    std::vector<u64> primes_;

    public:
    PrimeTable(u64 limit, std::vector<u64> primes)
        : limit_(limit), primes_(std::move(primes))
    {
    }

    u64 limit() const { return limit_; }
    std::span<const u64> primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

    /* binary search; only meaningful for n <= limit() */
    bool contains(u64 n) const;
};

/* Bit sieve over the odd numbers up to limit. Throws DomainError if limit < 2. */
PrimeTable sieve_primes(u64 limit);

/* Deterministic Miller-Rabin, exact for every 64-bit input. */
bool is_prime(u64 n);

/*
 * Legendre symbol (a/q) for an odd prime q, by the reciprocity descent
 * of the Jacobi symbol. q < 3 or q even is a DomainError; primality of q
 * itself is the caller's responsibility.
 */
int legendre(i64 a, u64 q);

u64 isqrt(u64 n);
u64 isqrt(u128 n);

/* The root when n is a perfect square. */
std::optional<u64> exact_sqrt(u64 n);
std::optional<u64> exact_sqrt(u128 n);

inline bool is_square(u64 n) { return exact_sqrt(n).has_value(); }
inline bool is_square(u128 n) { return exact_sqrt(n).has_value(); }

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/*
 * Square root of a modulo the odd prime q (Tonelli-Shanks), the smaller of
 * the two roots. Empty when a is a non-residue. DomainError if q is not an
 * odd prime.
 */
std::optional<u64> mod_sqrt(i64 a, u64 q);

/* base^exp, or DomainError when the result leaves 128 bits. */
u128 checked_pow(u64 base, unsigned exp);

std::string to_string(u128 n);

} // namespace k2rank

#endif /* K2RANK_ARITH_HPP */
