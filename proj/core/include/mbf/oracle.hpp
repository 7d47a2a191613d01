#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mbf/boolcube.hpp"

namespace mbf {

struct QueryRecord {
    VecIndex position;
    bool answer;
};

/// Membership-query interface: the only channel through which the search and
/// identification code may read function values. Answers are consistent with
/// one fixed monotone function for the oracle's lifetime; the query counter
/// increments by exactly one per call.
class MembershipOracle {
public:
    explicit MembershipOracle(Dimension n, bool keep_log = true)
        : n_(n), keep_log_(keep_log) {}
    virtual ~MembershipOracle() = default;

    bool query(VecIndex k) {
        if (k > n_.last_index())
            throw std::out_of_range("MembershipOracle: index outside the cube");
        const bool a = answer(k);
        ++queries_;
        if (keep_log_) log_.push_back({k, a});
        return a;
    }

    std::uint64_t queries_asked() const noexcept { return queries_; }
    std::span<const QueryRecord> log() const noexcept { return log_; }

    void reset_count() noexcept {
        queries_ = 0;
        log_.clear();
    }

    Dimension dim() const noexcept { return n_; }

protected:
    virtual bool answer(VecIndex k) const = 0;

private:
    Dimension n_;
    bool keep_log_;
    std::uint64_t queries_ = 0;
    std::vector<QueryRecord> log_;
};

/// Oracle backed by an explicit monotone truth table.
class TableOracle final : public MembershipOracle {
public:
    explicit TableOracle(MonotoneTable table, bool keep_log = true)
        : MembershipOracle(table.dim(), keep_log), table_(std::move(table)) {}

    const MonotoneTable& table() const noexcept { return table_; }

protected:
    bool answer(VecIndex k) const override { return table_.bit(k); }

private:
    MonotoneTable table_;
};

/// Oracle backed by a minimal-true antichain; needs no explicit table, so it
/// scales to dimensions where one cannot be materialized.
class MinTrueOracle final : public MembershipOracle {
public:
    MinTrueOracle(std::vector<VecIndex> min_true, Dimension n, bool keep_log = true);

    std::span<const VecIndex> min_true() const noexcept { return min_true_; }

protected:
    bool answer(VecIndex k) const override { return eval_from_min_true(min_true_, k); }

private:
    std::vector<VecIndex> min_true_;
};

}  // namespace mbf
