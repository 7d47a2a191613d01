#include "mbf/generator.hpp"

#include <atomic>
#include <thread>
#include <utility>

namespace mbf {

namespace {

// Shared depth-first engine. A frame holds one generated function together
// with its row index and the next position of its zero scan; pushing a frame
// ORs one more row into a copy, exactly like the by-value recursion it
// replaces. Frames are pooled so steady-state generation does not allocate.
class GenEngine {
public:
    using RowFn = std::function<const BitVec&(std::size_t)>;
    using RawSink = std::function<bool(const BitVec&)>;

    GenEngine(std::size_t size, RowFn row) : size_(size), row_(std::move(row)) {}

    void set_sink(const RawSink* sink) { sink_ = sink; }

    // Emits base (unless resuming), then every function reachable from the
    // rows start_row down to stop_row. A resume target suppresses everything
    // up to and including itself.
    GenStats run(const BitVec& base, std::size_t start_row, std::size_t stop_row,
                 const BitVec* resume) {
        GenStats stats;
        std::size_t root = start_row;
        if (resume) {
            if (auto first = resume->first_one()) {
                if (*first < stop_row) return stats;  // whole range precedes the target
                if (*first <= start_row) {
                    root = *first;
                    descend_to(base, *resume, root, stats);
                    if (!drain(stats)) return stats;
                    if (root == stop_row) return stats;
                    --root;
                }
                // a target rooted at a row past start_row precedes the whole
                // range: generate it all
            }
            // a target with no ones is the constant-zero function; everything
            // after it is the normal stream minus the base emission
        } else {
            if (!emit(base, stats)) return stats;
        }
        for (std::size_t i = root + 1; i-- > stop_row;) {
            push_root(base, i, stats);
            if (!emit(pool_[0].f, stats)) return stats;
            if (!drain(stats)) return stats;
        }
        return stats;
    }

private:
    struct Frame {
        BitVec f;
        std::size_t row = 0;
        std::size_t next_j = 0;
    };

    // Grows the pool; existing references are invalidated, so callers take
    // references only after reserving the slot they need.
    Frame& slot(std::size_t d) {
        if (d >= pool_.size()) pool_.resize(d + 1);
        return pool_[d];
    }

    bool emit(const BitVec& f, GenStats& stats) {
        ++stats.count;
        if (sink_) return (*sink_)(f);
        return true;
    }

    void note_depth(GenStats& stats) {
        if (depth_ > stats.max_recursion_depth) stats.max_recursion_depth = depth_;
    }

    void push_root(const BitVec& base, std::size_t i, GenStats& stats) {
        Frame& fr = slot(0);
        fr.f = base;
        fr.f.or_with(row_(i));
        fr.row = i;
        fr.next_j = size_ - 1;
        depth_ = 1;
        note_depth(stats);
    }

    // Runs the scan loop until the stack under the current root is empty.
    // Returns false when the sink asked to stop.
    bool drain(GenStats& stats) {
        while (depth_ > 0) {
            std::size_t branch;
            {
                Frame& top = pool_[depth_ - 1];
                auto j = top.f.last_zero_in(top.row + 1, top.next_j);
                if (!j) {
                    --depth_;
                    continue;
                }
                branch = *j;
                top.next_j = branch - 1;  // the scan resumes below the branch
            }
            Frame& child = slot(depth_);
            const Frame& top = pool_[depth_ - 1];
            child.f = top.f;
            child.f.or_with(row_(branch));
            child.row = branch;
            child.next_j = size_ - 1;
            ++depth_;
            note_depth(stats);
            if (!emit(child.f, stats)) return false;
        }
        return true;
    }

    // Rebuilds the frame stack to the state the depth-first walk has right
    // after emitting the target, so draining yields the strict suffix of the
    // root's subtree.
    void descend_to(const BitVec& base, const BitVec& target, std::size_t root,
                    GenStats& stats) {
        push_root(base, root, stats);
        if (pool_[0].f == target) return;
        BitVec child;
        while (true) {
            std::size_t branch;
            {
                Frame& top = pool_[depth_ - 1];
                auto j = top.f.last_zero_in(top.row + 1, top.next_j);
                if (!j) throw std::logic_error("gen: resume target is not reachable");
                branch = *j;
                child = top.f;
                child.or_with(row_(branch));
                // The subtree rooted at this child spans the interval from
                // child to child-with-all-ones-above-branch: a target with a
                // larger prefix lies in a later sibling.
                if (BitVec::compare_prefix(target, child, branch) > 0) {
                    top.next_j = branch - 1;
                    continue;
                }
                if (child > target)
                    throw std::logic_error("gen: resume target is not reachable");
                top.next_j = branch - 1;
            }
            Frame& fr = slot(depth_);
            fr.f = child;
            fr.row = branch;
            fr.next_j = size_ - 1;
            ++depth_;
            note_depth(stats);
            if (fr.f == target) return;
        }
    }

    std::size_t size_;
    RowFn row_;
    const RawSink* sink_ = nullptr;
    std::vector<Frame> pool_;
    std::size_t depth_ = 0;
};

// Row access for the cube: materialized on demand and cached while the cache
// stays small; recomputed per use for larger dimensions.
class CubeRows {
public:
    explicit CubeRows(Dimension n) : n_(n) {
        if (n.value() <= 16) {
            cached_.resize(n.cube_size());
            have_.resize(n.cube_size(), false);
        }
    }

    const BitVec& operator()(std::size_t i) {
        if (!have_.empty()) {
            if (!have_[i]) {
                cached_[i] = row_table(i, n_).bits();
                have_[i] = true;
            }
            return cached_[i];
        }
        scratch_ = row_table(i, n_).bits();
        return scratch_;
    }

private:
    Dimension n_;
    std::vector<BitVec> cached_;
    std::vector<bool> have_;
    BitVec scratch_;
};

}  // namespace

GenStats gen_all(const GenConfig& cfg) {
    const Dimension n = cfg.n;
    if (n.value() > table_dimension_cap())
        throw ScaleError("gen_all: dimension exceeds the table cap");
    if (cfg.resume_from && cfg.resume_from->table().size() != n.cube_size())
        throw std::invalid_argument("gen_all: resume function has the wrong length");
    VecIndex stop = 0;
    if (cfg.stop_before_row) {
        if (*cfg.stop_before_row > n.last_index())
            throw std::out_of_range("gen_all: stop row outside the cube");
        stop = *cfg.stop_before_row;
    }

    CubeRows rows(n);
    GenEngine engine(n.cube_size(),
                     [&rows](std::size_t i) -> const BitVec& { return rows(i); });
    GenEngine::RawSink raw;
    TruthTable workspace(n);
    if (cfg.emit) {
        raw = [&](const BitVec& f) {
            workspace.assign_words(f.words());
            return cfg.emit(workspace);
        };
        engine.set_sink(&raw);
    }
    const BitVec zero(n.cube_size());
    return engine.run(zero, n.last_index(), stop,
                      cfg.resume_from ? &cfg.resume_from->table().bits() : nullptr);
}

std::uint64_t count_partition(Dimension n, VecIndex begin_row, VecIndex end_row) {
    if (begin_row > end_row || end_row > n.cube_size())
        throw std::out_of_range("count_partition: bad row range");
    if (begin_row == end_row) return 0;
    CubeRows rows(n);
    GenEngine engine(n.cube_size(),
                     [&rows](std::size_t i) -> const BitVec& { return rows(i); });
    const BitVec zero(n.cube_size());
    GenStats stats = engine.run(zero, end_row - 1, begin_row, nullptr);
    return stats.count - 1;  // the engine counts the base emission too
}

std::uint64_t dedekind_count(Dimension n, unsigned threads) {
    if (n.value() > 6)
        throw ScaleError(
            "dedekind_count: supported for n <= 6 only; the counts for larger n "
            "are published as OEIS A000372");
    if (threads <= 1) return count_partition(n, 0, n.cube_size()) + 1;

    std::atomic<VecIndex> next{0};
    std::atomic<std::uint64_t> total{0};
    auto worker = [&] {
        for (;;) {
            const VecIndex row = next.fetch_add(1);
            if (row >= n.cube_size()) return;
            total.fetch_add(count_partition(n, row, row + 1));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return total.load() + 1;
}

GenStats gen_upsets(std::size_t size,
                    const std::function<bool(std::size_t, std::size_t)>& relation,
                    const std::function<bool(const BitVec&)>& emit) {
    if (size == 0) throw std::invalid_argument("gen_upsets: empty poset");
    if (size > 4096) throw ScaleError("gen_upsets: poset size limited to 4096");
    std::vector<BitVec> rows(size, BitVec(size));
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (relation(i, j)) {
                if (j < i)
                    throw std::invalid_argument(
                        "gen_upsets: indices must be a linear extension of the relation");
                rows[i].set_bit(j, true);
            }
        }
        if (!rows[i].bit(i))
            throw std::invalid_argument("gen_upsets: relation must be reflexive");
    }
    GenEngine engine(size, [&rows](std::size_t i) -> const BitVec& { return rows[i]; });
    if (emit) engine.set_sink(&emit);
    return engine.run(BitVec(size), size - 1, 0, nullptr);
}

}  // namespace mbf
