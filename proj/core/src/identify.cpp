#include "mbf/identify.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace mbf {

namespace {

// Recursive splitting over the segment [left, right] whose first minimal
// true position is lm1 and last maximal false position is rm0. Exits early
// on the segment shapes the two searches already settle: length at most
// four, the 0...01...1 shape, and the 0...0101...1 shape where the two
// landmark positions are adjacent.
void id_rec(MembershipOracle& o, KnowledgeStore& k, VecIndex left, VecIndex right,
            VecIndex lm1, VecIndex rm0, unsigned depth) {
    if (depth > 2 * o.dim().value())
        throw std::logic_error("identify: recursion exceeded the bisection depth bound");
    if (right - left <= 3) return;
    if (lm1 > rm0) return;
    if (lm1 + 1 == rm0) return;

    if (rm0 + 1 == right) {
        // counters the short-period (0,...,0,1)-repeat shapes, whose output
        // size stays constant while unguarded splitting keeps paying queries
        const VecIndex t = rm0 - 1;
        if (!k.fun_value(t)) {
            if (o.query(t))
                k.reg_implicant(t);
            else
                k.reg_clause(t);
        }
    }

    const VecIndex m = (left + right) / 2;
    if (lm1 > m) {  // left half is constant zero
        id_rec(o, k, m + 1, right, lm1, rm0, depth + 1);
        return;
    }
    if (rm0 <= m) {  // right half is constant one
        id_rec(o, k, left, m, lm1, rm0, depth + 1);
        return;
    }
    const VecIndex p0 = search_last_ext(o, k, {left, m});
    id_rec(o, k, left, m, lm1, p0, depth + 1);
    const VecIndex p1 = search_first_ext(o, k, {m + 1, right});
    id_rec(o, k, m + 1, right, p1, rm0, depth + 1);
}

void take_snapshot(SearchPhaseSnapshot* snap, std::vector<VecIndex> tpi,
                   std::vector<VecIndex> tpc, std::uint64_t queries) {
    if (!snap) return;
    snap->implicants = std::move(tpi);
    snap->clauses = std::move(tpc);
    snap->queries = queries;
}

}  // namespace

IdentResult identify(MembershipOracle& o, SearchPhaseSnapshot* snapshot) {
    const Dimension n = o.dim();
    KnowledgeStore k(n);

    if (n.value() == 0) {
        // the degenerate window has no bisection: one query decides which
        // constant the function is
        const bool one = o.query(0);
        IdentResult r;
        if (one)
            r.min_true = {0};
        else
            r.max_false = {0};
        r.queries = o.queries_asked();
        take_snapshot(snapshot, r.min_true, r.max_false, r.queries);
        return r;
    }

    const VecIndex last = n.last_index();
    const VecIndex lm1 = search_first_ext(o, k, {0, last});

    // Settle the value at the returned position: one extra query at most.
    // An answer of zero there proves the constant-zero function.
    bool lm1_true;
    if (const auto v = k.fun_value(lm1)) {
        if (!*v) throw std::logic_error("identify: inconsistent oracle answers");
        lm1_true = true;
    } else {
        lm1_true = o.query(lm1);
        if (lm1_true) k.reg_implicant(lm1);
    }
    if (!lm1_true) {
        IdentResult r;
        r.max_false = {last};
        r.queries = o.queries_asked();
        r.peak_tpi = k.peak_implicants();
        r.peak_tpc = k.peak_clauses();
        take_snapshot(snapshot, r.min_true, r.max_false, r.queries);
        return r;
    }

    const VecIndex rm0 = search_last_ext(o, k, {0, last});

    if (lm1 == 0) {
        // a true value on the all-zeros vector forces the constant one
        IdentResult r;
        r.min_true = {0};
        r.queries = o.queries_asked();
        r.peak_tpi = k.peak_implicants();
        r.peak_tpc = k.peak_clauses();
        take_snapshot(snapshot, r.min_true, r.max_false, r.queries);
        return r;
    }

    if (snapshot) {
        auto fs = k.finalize();
        take_snapshot(snapshot, std::move(fs.min_true), std::move(fs.max_false),
                      o.queries_asked());
    }

    id_rec(o, k, 0, last, lm1, rm0, 1);

    auto fs = k.finalize();
    IdentResult r;
    r.min_true = std::move(fs.min_true);
    r.max_false = std::move(fs.max_false);
    r.queries = o.queries_asked();
    r.peak_tpi = fs.peak_tpi;
    r.peak_tpc = fs.peak_tpc;
    return r;
}

namespace {

struct SweepAccumulator {
    std::uint64_t total = 0;
    std::uint64_t q_max = 0;
    std::uint64_t q_sum = 0;
    std::vector<std::uint64_t> q_histogram;
    std::vector<std::uint64_t> ratio_histogram = std::vector<std::uint64_t>(101, 0);
    std::uint64_t ratio_excluded = 0;
    std::size_t peak_tpi_max = 0;
    std::size_t peak_tpc_max = 0;
    std::uint64_t completed_in_search = 0;
    std::uint64_t bound_violations = 0;

    void merge(const SweepAccumulator& o) {
        total += o.total;
        q_max = std::max(q_max, o.q_max);
        q_sum += o.q_sum;
        if (q_histogram.size() < o.q_histogram.size())
            q_histogram.resize(o.q_histogram.size(), 0);
        for (std::size_t i = 0; i < o.q_histogram.size(); ++i)
            q_histogram[i] += o.q_histogram[i];
        for (std::size_t i = 0; i < ratio_histogram.size(); ++i)
            ratio_histogram[i] += o.ratio_histogram[i];
        ratio_excluded += o.ratio_excluded;
        peak_tpi_max = std::max(peak_tpi_max, o.peak_tpi_max);
        peak_tpc_max = std::max(peak_tpc_max, o.peak_tpc_max);
        completed_in_search += o.completed_in_search;
        bound_violations += o.bound_violations;
    }
};

void sweep_one(Dimension n, std::uint64_t packed, SweepAccumulator& acc) {
    TruthTable t(n);
    const std::uint64_t word = packed;
    t.assign_words({&word, 1});
    MonotoneTable mt(t);
    const auto want_min = brute_min_true(mt);
    const auto want_max = brute_max_false(mt);

    TableOracle oracle(std::move(mt), /*keep_log=*/false);
    SearchPhaseSnapshot snap;
    const IdentResult r = identify(oracle, &snap);

    if (r.min_true != want_min || r.max_false != want_max)
        throw RecoveryError("verify_sweep: wrong recovery of function " +
                            t.bit_string());

    ++acc.total;
    acc.q_sum += r.queries;
    acc.q_max = std::max(acc.q_max, r.queries);
    if (acc.q_histogram.size() <= r.queries) acc.q_histogram.resize(r.queries + 1, 0);
    ++acc.q_histogram[r.queries];
    acc.peak_tpi_max = std::max(acc.peak_tpi_max, r.peak_tpi);
    acc.peak_tpc_max = std::max(acc.peak_tpc_max, r.peak_tpc);
    if (snap.implicants == want_min && snap.clauses == want_max)
        ++acc.completed_in_search;

    const std::uint64_t m = want_min.size() + want_max.size();
    const std::uint64_t nv = n.value();
    const bool is_zero_fn = want_min.empty();
    if (nv == 0) {
        // one query is the information-theoretic minimum here, so the n*m
        // budget cannot apply to the constants of the empty cube
        if (r.queries != 1) ++acc.bound_violations;
        ++acc.ratio_excluded;
    } else if (is_zero_fn) {
        if (r.queries != nv * m + 1) ++acc.bound_violations;
        ++acc.ratio_excluded;
    } else {
        if (r.queries > nv * m) ++acc.bound_violations;
        ++acc.ratio_histogram[(100 * r.queries) / (nv * m)];
    }
}

}  // namespace

SweepReport verify_sweep(Dimension n, unsigned threads) {
    if (n.value() > 6) throw ScaleError("verify_sweep: supported for n <= 6 only");

    // One word holds any table of n <= 6.
    std::vector<std::uint64_t> functions;
    GenConfig cfg{n, std::nullopt, std::nullopt, [&](const TruthTable& t) {
                      functions.push_back(t.words()[0]);
                      return true;
                  }};
    gen_all(cfg);

    SweepAccumulator acc;
    if (threads <= 1) {
        for (std::uint64_t packed : functions) sweep_one(n, packed, acc);
    } else {
        std::vector<SweepAccumulator> parts(threads);
        std::atomic<std::size_t> next{0};
        std::vector<std::string> errors(threads);
        auto worker = [&](unsigned id) {
            try {
                constexpr std::size_t chunk = 1024;
                for (;;) {
                    const std::size_t begin = next.fetch_add(chunk);
                    if (begin >= functions.size()) return;
                    const std::size_t end = std::min(begin + chunk, functions.size());
                    for (std::size_t i = begin; i < end; ++i)
                        sweep_one(n, functions[i], parts[id]);
                }
            } catch (const std::exception& e) {
                errors[id] = e.what();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (!e.empty()) throw RecoveryError(e);
        for (const auto& p : parts) acc.merge(p);
    }

    SweepReport rep;
    rep.n = n.value();
    rep.total = acc.total;
    rep.q_max = acc.q_max;
    rep.q_sum = acc.q_sum;
    rep.q_ave = acc.total ? static_cast<double>(acc.q_sum) / static_cast<double>(acc.total)
                          : 0.0;
    rep.q_histogram = std::move(acc.q_histogram);
    rep.ratio_histogram = std::move(acc.ratio_histogram);
    rep.ratio_excluded = acc.ratio_excluded;
    rep.peak_tpi_max = acc.peak_tpi_max;
    rep.peak_tpc_max = acc.peak_tpc_max;
    rep.completed_in_search = acc.completed_in_search;
    rep.bound_violations = acc.bound_violations;
    return rep;
}

}  // namespace mbf
