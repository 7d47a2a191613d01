#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mbf/boolcube.hpp"

namespace mbf {

/// The learner's partial knowledge about an unknown monotone function: the
/// set of temporary prime implicants (indices of known true vectors, kept
/// pairwise incomparable) and the dual set of temporary prime clauses. Once
/// identification is complete the two sets are exactly the minimal-true and
/// maximal-false sets.
class KnowledgeStore {
public:
    explicit KnowledgeStore(Dimension n) : n_(n) {}

    /// Value of the function at pos as far as the current knowledge decides
    /// it: true if some implicant precedes pos, false if pos precedes some
    /// clause, nothing otherwise.
    std::optional<bool> fun_value(VecIndex pos) const;

    /// Records a known true vector. A new implicant absorbed by an existing
    /// one is dropped; otherwise it replaces every implicant it absorbs.
    void reg_implicant(VecIndex idx);

    /// Dual registration of a known false vector.
    void reg_clause(VecIndex idx);

    std::span<const VecIndex> implicants() const noexcept { return tpi_; }
    std::span<const VecIndex> clauses() const noexcept { return tpc_; }

    std::size_t peak_implicants() const noexcept { return peak_tpi_; }
    std::size_t peak_clauses() const noexcept { return peak_tpc_; }

    Dimension dim() const noexcept { return n_; }

    struct FinalSets {
        std::vector<VecIndex> min_true;
        std::vector<VecIndex> max_false;
        std::size_t peak_tpi = 0;
        std::size_t peak_tpc = 0;
    };
    FinalSets finalize() const { return {tpi_, tpc_, peak_tpi_, peak_tpc_}; }

    /// Observation hook for instrumented runs; called with every accepted or
    /// rejected registration before absorption is applied.
    std::function<void(bool implicant, VecIndex idx)> on_register;

private:
    void check_range(VecIndex idx) const;

    Dimension n_;
    std::vector<VecIndex> tpi_;  // sorted ascending
    std::vector<VecIndex> tpc_;  // sorted ascending
    std::size_t peak_tpi_ = 0;
    std::size_t peak_tpc_ = 0;
};

}  // namespace mbf
