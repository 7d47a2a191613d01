#include "mbf/boolcube.hpp"

#include <algorithm>
#include <cstdlib>

namespace mbf {

namespace {

// Positions a..b of one word, MSB-first packing.
constexpr std::uint64_t word_range_mask(unsigned a, unsigned b) noexcept {
    const std::uint64_t hi = ~std::uint64_t{0} >> a;
    const std::uint64_t lo = ~std::uint64_t{0} << (63 - b);
    return hi & lo;
}

// Masks of in-word positions whose coordinate bit b (b < 6) is zero;
// position 0 is the most significant bit.
constexpr std::uint64_t zero_coord_mask[6] = {
    0xAAAA'AAAA'AAAA'AAAAull, 0xCCCC'CCCC'CCCC'CCCCull,
    0xF0F0'F0F0'F0F0'F0F0ull, 0xFF00'FF00'FF00'FF00ull,
    0xFFFF'0000'FFFF'0000ull, 0xFFFF'FFFF'0000'0000ull,
};

}  // namespace

unsigned table_dimension_cap() {
    if (const char* env = std::getenv("MBF_TABLE_CAP")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= Dimension::max_index_bits)
            return static_cast<unsigned>(v);
    }
    return 24;
}

BitVec::BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void BitVec::or_with(const BitVec& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
}

std::optional<std::size_t> BitVec::last_zero_in(std::size_t lo, std::size_t hi) const {
    if (lo > hi || hi >= size_) return std::nullopt;
    std::size_t w_hi = hi >> 6;
    const std::size_t w_lo = lo >> 6;
    for (std::size_t w = w_hi + 1; w-- > w_lo;) {
        const unsigned a = (w == w_lo) ? static_cast<unsigned>(lo & 63) : 0;
        const unsigned b = (w == w_hi) ? static_cast<unsigned>(hi & 63) : 63;
        const std::uint64_t zeros = ~words_[w] & word_range_mask(a, b);
        if (zeros)
            return (w << 6) + (63 - static_cast<unsigned>(std::countr_zero(zeros)));
    }
    return std::nullopt;
}

std::optional<std::size_t> BitVec::first_one() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w])
            return (w << 6) + static_cast<unsigned>(std::countl_zero(words_[w]));
    }
    return std::nullopt;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t p = 0; p < size_; ++p)
        if (bit(p)) s[p] = '1';
    return s;
}

BitVec BitVec::parse(std::string_view text) {
    BitVec v(text.size());
    for (std::size_t p = 0; p < text.size(); ++p) {
        if (text[p] == '1')
            v.set_bit(p, true);
        else if (text[p] != '0')
            throw std::invalid_argument("BitVec: expected only '0' and '1' characters");
    }
    return v;
}

BitVec BitVec::concat(const BitVec& a, const BitVec& b) {
    BitVec out(a.size_ + b.size_);
    std::copy(a.words_.begin(), a.words_.end(), out.words_.begin());
    for (std::size_t p = 0; p < b.size_; ++p)
        if (b.bit(p)) out.set_bit(a.size_ + p, true);
    return out;
}

std::strong_ordering BitVec::operator<=>(const BitVec& other) const noexcept {
    if (auto c = size_ <=> other.size_; c != 0) return c;
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (auto c = words_[w] <=> other.words_[w]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::strong_ordering BitVec::compare_prefix(const BitVec& a, const BitVec& b,
                                            std::size_t upto) noexcept {
    const std::size_t w_hi = upto >> 6;
    for (std::size_t w = 0; w < w_hi; ++w)
        if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    const std::uint64_t mask = word_range_mask(0, static_cast<unsigned>(upto & 63));
    return (a.words_[w_hi] & mask) <=> (b.words_[w_hi] & mask);
}

namespace {

std::size_t checked_table_size(Dimension n) {
    if (n.value() > table_dimension_cap())
        throw ScaleError("TruthTable: dimension exceeds the table cap (see MBF_TABLE_CAP)");
    return n.cube_size();
}

}  // namespace

TruthTable::TruthTable(Dimension n) : n_(n), bits_(checked_table_size(n)) {}

TruthTable::TruthTable(Dimension n, BitVec bits) : n_(n), bits_(std::move(bits)) {
    if (n.value() > table_dimension_cap())
        throw ScaleError("TruthTable: dimension exceeds the table cap (see MBF_TABLE_CAP)");
    if (bits_.size() != n.cube_size())
        throw std::invalid_argument("TruthTable: bit sequence length must be 2^n");
}

void TruthTable::assign_words(std::span<const std::uint64_t> words) {
    if (words.size() != bits_.words().size())
        throw std::invalid_argument("TruthTable: word count mismatch");
    std::copy(words.begin(), words.end(), bits_.words().begin());
}

TruthTable TruthTable::from_bit_string(std::string_view text) {
    const std::size_t len = text.size();
    if (len == 0 || (len & (len - 1)) != 0)
        throw std::invalid_argument("TruthTable: length must be a power of two");
    const unsigned n = static_cast<unsigned>(std::countr_zero(len));
    return TruthTable(Dimension(n), BitVec::parse(text));
}

MonotoneTable::MonotoneTable(TruthTable t) : table_(std::move(t)) {
    if (!is_monotone(table_))
        throw std::invalid_argument("MonotoneTable: table is not monotone");
}

bool precedes_subset(VecIndex i, VecIndex j, Dimension n) {
    if (i > n.last_index() || j > n.last_index())
        throw std::out_of_range("precedes_subset: index outside the cube");
    return precedes(i, j);
}

bool precedes_blockdescent(VecIndex i, VecIndex j, Dimension n) {
    if (i > n.last_index() || j > n.last_index())
        throw std::out_of_range("precedes_blockdescent: index outside the cube");
    unsigned m = n.value();
    while (m >= 1) {
        if (i > j) return false;
        if (i == j || m == 1) return true;
        --m;
        const VecIndex half = VecIndex{1} << m;
        if (i >= half) i -= half;
        if (j >= half) j -= half;
    }
    return i == j;  // the 0-dimensional cube has a single vector
}

PrecedenceMatrix PrecedenceMatrix::build(Dimension n) {
    if (n.value() > max_dimension)
        throw ScaleError("PrecedenceMatrix: explicit matrices are limited to n <= 12");
    PrecedenceMatrix m(n);
    // P_0 = (1); each step assembles the 2x2 block form from the previous stage.
    std::vector<BitVec> rows;
    BitVec one(1);
    one.set_bit(0, true);
    rows.push_back(one);
    for (unsigned stage = 1; stage <= n.value(); ++stage) {
        const std::size_t half = std::size_t{1} << (stage - 1);
        std::vector<BitVec> next;
        next.reserve(half * 2);
        const BitVec zeros(half);
        for (std::size_t i = 0; i < half; ++i) next.push_back(BitVec::concat(rows[i], rows[i]));
        for (std::size_t i = 0; i < half; ++i) next.push_back(BitVec::concat(zeros, rows[i]));
        rows = std::move(next);
    }
    m.rows_ = std::move(rows);
    return m;
}

TruthTable row_table(VecIndex i, Dimension n) {
    if (i > n.last_index()) throw std::out_of_range("row_table: index outside the cube");
    TruthTable out(n);
    const unsigned nv = n.value();
    // Doubling construction over the variables, last variable first: a clear
    // coordinate repeats the pattern, a set coordinate prefixes it with zeros.
    std::uint64_t w = std::uint64_t{1} << 63;
    std::size_t len = 1;
    const unsigned in_word = std::min(nv, 6u);
    for (unsigned b = 0; b < in_word; ++b) {
        w = ((i >> b) & 1) ? (w >> len) : (w | (w >> len));
        len <<= 1;
    }
    std::vector<std::uint64_t> cur{w};
    for (unsigned b = 6; b < nv; ++b) {
        const std::size_t k = cur.size();
        cur.resize(k * 2);
        std::copy(cur.begin(), cur.begin() + k, cur.begin() + k);
        if ((i >> b) & 1)
            std::fill(cur.begin(), cur.begin() + k, 0);
    }
    out.assign_words(cur);
    return out;
}

TruthTable clause_table(VecIndex j, Dimension n) {
    if (j > n.last_index()) throw std::out_of_range("clause_table: index outside the cube");
    TruthTable out(n);
    const unsigned nv = n.value();
    // Dual doubling: a set coordinate repeats the pattern, a clear coordinate
    // (a variable of the clause) appends an all-ones block.
    std::uint64_t w = 0;
    std::size_t len = 1;
    const unsigned in_word = std::min(nv, 6u);
    for (unsigned b = 0; b < in_word; ++b) {
        if ((j >> b) & 1) {
            w |= w >> len;
        } else {
            w |= word_range_mask(static_cast<unsigned>(len), static_cast<unsigned>(2 * len - 1));
        }
        len <<= 1;
    }
    std::vector<std::uint64_t> cur{w};
    for (unsigned b = 6; b < nv; ++b) {
        const std::size_t k = cur.size();
        cur.resize(k * 2);
        std::copy(cur.begin(), cur.begin() + k, cur.begin() + k);
        if (!((j >> b) & 1))
            std::fill(cur.begin() + k, cur.end(), ~std::uint64_t{0});
    }
    out.assign_words(cur);
    return out;
}

bool eval_from_min_true(std::span<const VecIndex> min_true, VecIndex k) noexcept {
    for (VecIndex i : min_true)
        if (precedes(i, k)) return true;
    return false;
}

bool eval_from_max_false(std::span<const VecIndex> max_false, VecIndex k) noexcept {
    for (VecIndex j : max_false)
        if (precedes(k, j)) return false;
    return true;
}

bool is_monotone(const TruthTable& t) {
    // One-bit-difference neighbor check: by transitivity of the precedence
    // relation, f(p without one set coordinate) <= f(p) for every p and
    // every set coordinate already implies monotonicity over all pairs.
    const unsigned n = t.dim().value();
    const auto words = t.words();
    const std::size_t size = t.size();
    for (unsigned b = 0; b < n; ++b) {
        const std::size_t delta = std::size_t{1} << b;
        if (b < 6) {
            // p and p + delta share a word; a shift aligns the upper neighbor.
            for (std::size_t w = 0; w < words.size(); ++w) {
                std::uint64_t mask = zero_coord_mask[b];
                if (size < 64) mask &= word_range_mask(0, static_cast<unsigned>(size - 1));
                if (words[w] & ~(words[w] << delta) & mask) return false;
            }
        } else {
            const std::size_t wdelta = delta >> 6;
            for (std::size_t w = 0; w < words.size(); ++w) {
                if ((w >> (b - 6)) & 1) continue;  // coordinate already set
                if (words[w] & ~words[w + wdelta]) return false;
            }
        }
    }
    return true;
}

std::vector<VecIndex> brute_min_true(const MonotoneTable& t) {
    std::vector<VecIndex> out;
    const VecIndex size = t.table().size();
    const unsigned n = t.dim().value();
    for (VecIndex p = 0; p < size; ++p) {
        if (!t.bit(p)) continue;
        bool minimal = true;
        for (unsigned b = 0; b < n && minimal; ++b)
            if ((p >> b) & 1)
                minimal = !t.bit(p ^ (VecIndex{1} << b));
        if (minimal) out.push_back(p);
    }
    return out;
}

std::vector<VecIndex> brute_max_false(const MonotoneTable& t) {
    std::vector<VecIndex> out;
    const VecIndex size = t.table().size();
    const unsigned n = t.dim().value();
    for (VecIndex p = 0; p < size; ++p) {
        if (t.bit(p)) continue;
        bool maximal = true;
        for (unsigned b = 0; b < n && maximal; ++b)
            if (!((p >> b) & 1))
                maximal = t.bit(p | (VecIndex{1} << b));
        if (maximal) out.push_back(p);
    }
    return out;
}

bool is_antichain(std::span<const VecIndex> set) noexcept {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = 0; b < set.size(); ++b)
            if (a != b && precedes(set[a], set[b])) return false;
    return true;
}

}  // namespace mbf
