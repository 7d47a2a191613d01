#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mbf/boolcube.hpp"

namespace mbf {

/// Receives each generated table; returning false stops the generation.
using GenSink = std::function<bool(const TruthTable&)>;

struct GenStats {
    std::uint64_t count = 0;
    std::size_t max_recursion_depth = 0;
};

struct GenConfig {
    Dimension n;
    /// When set, only the functions strictly after this one are emitted.
    std::optional<MonotoneTable> resume_from;
    /// Final value of the outer row loop: only functions whose first one
    /// lies at this position or later are emitted (the constant-zero
    /// function is still emitted first).
    std::optional<VecIndex> stop_before_row;
    /// Empty sink selects pure counting.
    GenSink emit;
};

/// Streams every monotone function of n variables in strictly increasing
/// lexicographic order, the constant-zero function first.
GenStats gen_all(const GenConfig& cfg);

/// Number of monotone functions whose first one lies at a row in
/// [begin_row, end_row). Counts over a disjoint cover of [0, 2^n) sum to the
/// total count minus one; the constant-zero function belongs to the caller.
std::uint64_t count_partition(Dimension n, VecIndex begin_row, VecIndex end_row);

/// Total number of monotone functions of n variables. The thread count only
/// affects scheduling, never the result. Supported for n <= 6.
std::uint64_t dedekind_count(Dimension n, unsigned threads = 1);

/// General form of the same generator: emits the characteristic vectors of
/// all up-closed subsets of an arbitrary finite poset, in lexicographic
/// order. The relation must be reflexive and the indices must be a linear
/// extension of it (relation(i, j) implies i <= j).
GenStats gen_upsets(std::size_t size,
                    const std::function<bool(std::size_t, std::size_t)>& relation,
                    const std::function<bool(const BitVec&)>& emit);

}  // namespace mbf
