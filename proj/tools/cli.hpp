#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mbf/boolcube.hpp"

namespace mbf::cli {

// Stable exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 2;      // malformed input text or flags
inline constexpr int exit_semantic = 3;   // well-formed but invalid input
inline constexpr int exit_scale = 4;      // unsupported problem size
inline constexpr int exit_mismatch = 5;   // verification recovered a wrong function
inline constexpr int exit_bound = 6;      // verification saw a query-budget violation

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Function text, bit form: the table printed left to right, position 0 first.
std::string format_bits(const TruthTable& t);

/// Function text, hex form: "x" followed by one hex digit per four bits of
/// the printed table, left to right. Defined for n >= 2.
std::string format_hex(const TruthTable& t);

/// Parses either text form; a leading 'x' selects hex.
TruthTable parse_function(std::string_view text, Dimension n);

struct IdentRecord {
    unsigned n = 0;
    std::vector<VecIndex> min_true;
    std::vector<VecIndex> max_false;
    std::uint64_t queries = 0;
};

/// One-line record, e.g. "n=3 minT=[2,5] maxF=[1,4] q=6".
std::string format_ident_record(const IdentRecord& r);
IdentRecord parse_ident_record(std::string_view line);

/// Two decimal places, ties to even.
std::string format_fixed2(double value);

/// Runs the tool; returns its exit code. Output goes to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mbf::cli
