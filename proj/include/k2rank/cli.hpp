#ifndef K2RANK_CLI_HPP
#define K2RANK_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "k2rank/criteria.hpp"

namespace k2rank::cli {

enum class Format
{
    csv,
    json,
};

struct RunConfig
{
    std::vector<u64> p_list;
    u64 limit = 0;
    Format format = Format::csv;
    std::optional<std::string> out;
    unsigned jobs = 1;
    FastPath fast_path = FastPath::off;
};

/* Exit codes: 0 success, 1 usage or domain error, 2 invariant violation. */
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_invariant = 2;

/* args excludes the program name */
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace k2rank::cli

#endif /* K2RANK_CLI_HPP */
