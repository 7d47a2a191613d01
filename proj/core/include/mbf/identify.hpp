#pragma once

#include <cstdint>
#include <vector>

#include "mbf/generator.hpp"
#include "mbf/knowledge.hpp"
#include "mbf/oracle.hpp"
#include "mbf/search.hpp"

namespace mbf {

struct IdentResult {
    std::vector<VecIndex> min_true;
    std::vector<VecIndex> max_false;
    std::uint64_t queries = 0;
    std::size_t peak_tpi = 0;
    std::size_t peak_tpc = 0;
};

/// Knowledge right after the initial two searches settled the first minimal
/// true and last maximal false vectors, before any recursive splitting.
struct SearchPhaseSnapshot {
    std::vector<VecIndex> implicants;
    std::vector<VecIndex> clauses;
    std::uint64_t queries = 0;
};

/// Thrown by verify_sweep when a recovered function does not match the
/// reference scan; the message names the offending function.
class RecoveryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Recovers the minimal-true and maximal-false sets of the oracle's hidden
/// monotone function using membership queries only. The query count is read
/// from the oracle's own counter.
IdentResult identify(MembershipOracle& o, SearchPhaseSnapshot* snapshot = nullptr);

struct SweepReport {
    unsigned n = 0;
    std::uint64_t total = 0;
    std::uint64_t q_max = 0;
    std::uint64_t q_sum = 0;
    double q_ave = 0.0;
    /// index = number of queries, value = how many functions used it
    std::vector<std::uint64_t> q_histogram;
    /// index = floor(100 * q / (n * m)); the constant-zero function is
    /// excluded, and so are both constants at n = 0 where the ratio is
    /// undefined
    std::vector<std::uint64_t> ratio_histogram;
    std::uint64_t ratio_excluded = 0;
    std::size_t peak_tpi_max = 0;
    std::size_t peak_tpc_max = 0;
    /// functions whose knowledge already equalled the reference sets right
    /// after the two initial searches
    std::uint64_t completed_in_search = 0;
    /// query-bound failures: q > n*m for a non-constant-zero function (at
    /// n >= 1), q != n*m + 1 for the constant zero, or q != 1 at n = 0
    std::uint64_t bound_violations = 0;
};

/// Generates every monotone function of n variables, identifies each one
/// behind a table oracle, checks exact recovery against the reference scans
/// and aggregates query statistics. A recovery mismatch throws RecoveryError.
SweepReport verify_sweep(Dimension n, unsigned threads = 1);

}  // namespace mbf
