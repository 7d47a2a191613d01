#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mbf/boolcube.hpp"

// Shared helpers for the test suites. The enumeration and monotonicity
// checks here are deliberately written from first principles, independent of
// the library's own implementations, so they can serve as reference oracles.

namespace mbf::test {

// Packs a table of 2^n bits into an integer whose numeric order equals the
// lexicographic order of the printed table (position 0 most significant).
inline bool packed_bit(std::uint64_t packed, unsigned pos, unsigned n) {
    const unsigned size = 1u << n;
    return (packed >> (size - 1 - pos)) & 1;
}

inline std::string packed_to_string(std::uint64_t packed, unsigned n) {
    const unsigned size = 1u << n;
    std::string s(size, '0');
    for (unsigned p = 0; p < size; ++p)
        if (packed_bit(packed, p, n)) s[p] = '1';
    return s;
}

inline mbf::TruthTable packed_to_table(std::uint64_t packed, unsigned n) {
    return mbf::TruthTable::from_bit_string(packed_to_string(packed, n));
}

inline std::uint64_t table_to_packed(const mbf::TruthTable& t) {
    std::uint64_t packed = 0;
    for (mbf::VecIndex p = 0; p < t.size(); ++p)
        packed = (packed << 1) | static_cast<std::uint64_t>(t.bit(p));
    return packed;
}

// All-pairs monotonicity test over every comparable pair.
inline bool naive_monotone(std::uint64_t packed, unsigned n) {
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < size; ++i)
        for (std::uint64_t j = 0; j < size; ++j)
            if ((i & ~j) == 0 && packed_bit(packed, i, n) && !packed_bit(packed, j, n))
                return false;
    return true;
}

// Every monotone function of n variables in ascending (lexicographic)
// order, by exhaustive filtering. Usable for n <= 4.
inline std::vector<std::uint64_t> enumerate_monotone(unsigned n) {
    const unsigned size = 1u << n;
    std::vector<std::uint64_t> out;
    const std::uint64_t end =
        (size >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    for (std::uint64_t w = 0;; ++w) {
        if (naive_monotone(w, n)) out.push_back(w);
        if (w == end) break;
    }
    return out;
}

// Random monotone function built as a disjunction of random conjunctions.
inline mbf::MonotoneTable random_monotone(unsigned n, std::mt19937_64& rng,
                                          unsigned terms) {
    mbf::Dimension dim(n);
    mbf::TruthTable t(dim);
    for (unsigned k = 0; k < terms; ++k) {
        const mbf::VecIndex i = rng() & dim.last_index();
        const mbf::TruthTable row = mbf::row_table(i, dim);
        for (mbf::VecIndex p = 0; p < t.size(); ++p)
            if (row.bit(p)) t.set_bit(p, true);
    }
    return mbf::MonotoneTable(t);
}

}  // namespace mbf::test
