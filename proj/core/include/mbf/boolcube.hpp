#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbf {

/// Serial number of a cube vector. The n-bit binary representation of the
/// value lists the vector's coordinates, most significant bit first, so the
/// lexicographic order of the vectors is the numeric order of their indices.
using VecIndex = std::uint64_t;

/// Thrown when an operation would exceed the configured materialization
/// limits (explicit truth tables, explicit matrices, exhaustive counts).
class ScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of variables of a Boolean cube. Index arithmetic supports
/// n <= 63; materializing a 2^n-bit table is capped separately, see
/// table_dimension_cap().
class Dimension {
public:
    static constexpr unsigned max_index_bits = 63;

    explicit Dimension(unsigned n) : n_(n) {
        if (n > max_index_bits)
            throw std::invalid_argument("Dimension: n must be <= 63");
    }
    unsigned value() const noexcept { return n_; }
    VecIndex cube_size() const noexcept { return VecIndex{1} << n_; }
    VecIndex last_index() const noexcept { return cube_size() - 1; }
    friend bool operator==(Dimension, Dimension) noexcept = default;

private:
    unsigned n_;
};

/// Largest n for which 2^n-bit tables may be materialized. Defaults to 24
/// (2 MiB per table); the environment variable MBF_TABLE_CAP overrides it.
unsigned table_dimension_cap();

/// Packed bit sequence. Position 0 is the leftmost printed bit and the most
/// significant one, so comparing two equal-length vectors as integers is the
/// same as comparing their printed strings.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size);

    std::size_t size() const noexcept { return size_; }

    bool bit(std::size_t pos) const noexcept {
        return (words_[pos >> 6] >> (63 - (pos & 63))) & 1u;
    }
    void set_bit(std::size_t pos, bool value) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (63 - (pos & 63));
        if (value)
            words_[pos >> 6] |= mask;
        else
            words_[pos >> 6] &= ~mask;
    }

    void or_with(const BitVec& other);

    /// Highest position in [lo, hi] holding a zero bit, if any.
    std::optional<std::size_t> last_zero_in(std::size_t lo, std::size_t hi) const;

    /// Lowest position holding a one bit, if any.
    std::optional<std::size_t> first_one() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    std::string to_string() const;
    static BitVec parse(std::string_view text);

    /// Concatenation; both operands keep their own lengths.
    static BitVec concat(const BitVec& a, const BitVec& b);

    std::strong_ordering operator<=>(const BitVec& other) const noexcept;
    bool operator==(const BitVec& other) const noexcept {
        return size_ == other.size_ && words_ == other.words_;
    }

    /// Compares the prefixes [0, upto] of two equal-length vectors.
    static std::strong_ordering compare_prefix(const BitVec& a, const BitVec& b,
                                               std::size_t upto) noexcept;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Vector of functional values of an n-variable function: bit j is f(alpha_j).
class TruthTable {
public:
    explicit TruthTable(Dimension n);
    TruthTable(Dimension n, BitVec bits);

    Dimension dim() const noexcept { return n_; }
    VecIndex size() const noexcept { return n_.cube_size(); }

    bool bit(VecIndex pos) const { return bits_.bit(pos); }
    void set_bit(VecIndex pos, bool value) { bits_.set_bit(pos, value); }

    const BitVec& bits() const noexcept { return bits_; }
    std::span<const std::uint64_t> words() const noexcept { return bits_.words(); }

    /// Replaces the contents with the given words (same length required).
    void assign_words(std::span<const std::uint64_t> words);

    std::string bit_string() const { return bits_.to_string(); }
    static TruthTable from_bit_string(std::string_view text);

    std::strong_ordering operator<=>(const TruthTable& other) const noexcept {
        return bits_ <=> other.bits_;
    }
    bool operator==(const TruthTable& other) const noexcept {
        return bits_ == other.bits_;
    }

private:
    Dimension n_;
    BitVec bits_;
};

/// A truth table validated to be monotone at construction.
class MonotoneTable {
public:
    explicit MonotoneTable(TruthTable t);

    const TruthTable& table() const noexcept { return table_; }
    Dimension dim() const noexcept { return table_.dim(); }
    bool bit(VecIndex pos) const { return table_.bit(pos); }

private:
    TruthTable table_;
};

/// Unchecked core of the precedence relation: alpha_i precedes alpha_j
/// exactly when every set bit of i is set in j.
constexpr bool precedes(VecIndex i, VecIndex j) noexcept { return (i & ~j) == 0; }

/// Range-checked bit-subset test, the production path.
bool precedes_subset(VecIndex i, VecIndex j, Dimension n);

/// Same relation computed by iterative descent through the 2x2 block
/// structure of the precedence matrix; kept as the structural reference.
bool precedes_blockdescent(VecIndex i, VecIndex j, Dimension n);

/// Explicit precedence matrix of dimension 2^n x 2^n. Entry (i, j) is 1
/// exactly when alpha_i precedes alpha_j; row i is the truth table of the
/// conjunction with characteristic vector alpha_i.
class PrecedenceMatrix {
public:
    static constexpr unsigned max_dimension = 12;

    static PrecedenceMatrix build(Dimension n);

    Dimension dim() const noexcept { return n_; }
    bool at(VecIndex i, VecIndex j) const { return rows_[i].bit(j); }
    const BitVec& row(VecIndex i) const { return rows_[i]; }

private:
    explicit PrecedenceMatrix(Dimension n) : n_(n) {}

    Dimension n_;
    std::vector<BitVec> rows_;
};

/// Truth table of the conjunction whose characteristic vector is alpha_i
/// (index 0 gives the constant-one function). Equals row i of the
/// precedence matrix.
TruthTable row_table(VecIndex i, Dimension n);

/// Truth table of the clause whose anti-characteristic vector is alpha_j
/// (index 2^n - 1 gives the constant-zero function). Equals the negated
/// column j of the precedence matrix.
TruthTable clause_table(VecIndex j, Dimension n);

/// Value of the function with the given minimal-true set at position k:
/// 1 exactly when some element of the set precedes alpha_k.
bool eval_from_min_true(std::span<const VecIndex> min_true, VecIndex k) noexcept;

/// Value of the function with the given maximal-false set at position k:
/// 0 exactly when alpha_k precedes some element of the set.
bool eval_from_max_false(std::span<const VecIndex> max_false, VecIndex k) noexcept;

bool is_monotone(const TruthTable& t);

/// Exhaustive reference scans; these are the test oracles for the
/// identification algorithms.
std::vector<VecIndex> brute_min_true(const MonotoneTable& t);
std::vector<VecIndex> brute_max_false(const MonotoneTable& t);

/// True when no element of the set precedes a different element.
bool is_antichain(std::span<const VecIndex> set) noexcept;

}  // namespace mbf
