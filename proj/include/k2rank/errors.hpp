#ifndef K2RANK_ERRORS_HPP
#define K2RANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace k2rank {

/* Input outside the domain of an operation (bad prime, l not in Omega, ...). */
class DomainError : public std::domain_error
{
    public:
    using std::domain_error::domain_error;
};

/* A bounded search ran out of room. */
class NotFoundError : public std::runtime_error
{
    public:
    using std::runtime_error::runtime_error;
};

/*
 * An arithmetic identity that must hold did not: dichotomy failure,
 * fast-path disagreement, broken marginal sums. Always a bug, never bad
 * input.
 */
class InvariantViolation : public std::logic_error
{
    public:
    using std::logic_error::logic_error;
};

} // namespace k2rank

#endif /* K2RANK_ERRORS_HPP */
