#include "doctest.h"
#include "mbf/oracle.hpp"
#include "test_util.hpp"

using namespace mbf;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("table oracle answers and counts") {
    TableOracle o(MonotoneTable(TruthTable::from_bit_string("00110111")));
    CHECK(o.query(5));
    CHECK(o.queries_asked() == 1);
    CHECK_FALSE(o.query(4));
    CHECK(o.queries_asked() == 2);
    CHECK(o.log().size() == 2);
    CHECK(o.log()[0].position == 5);
    CHECK(o.log()[0].answer == true);
    CHECK_THROWS_AS(o.query(8), std::out_of_range);
    CHECK(o.queries_asked() == 2);  // a rejected call does not count
}

TEST_CASE("minimal-true oracle") {
    MinTrueOracle o({2, 5}, Dimension(3));
    CHECK(o.query(5));
    CHECK(o.query(7));
    CHECK_FALSE(o.query(4));

    MinTrueOracle zero({}, Dimension(3));
    for (VecIndex k = 0; k < 8; ++k) CHECK_FALSE(zero.query(k));

    CHECK_THROWS_AS(MinTrueOracle({2, 3}, Dimension(3)), std::invalid_argument);
    CHECK_THROWS_AS(MinTrueOracle({9}, Dimension(3)), std::out_of_range);
}

TEST_CASE("reset clears the counter and the log") {
    TableOracle o(MonotoneTable(TruthTable::from_bit_string("0011")));
    CHECK(o.queries_asked() == 0);
    for (int k = 0; k < 5; ++k) o.query(static_cast<VecIndex>(k % 4));
    CHECK(o.queries_asked() == 5);
    o.reset_count();
    CHECK(o.queries_asked() == 0);
    CHECK(o.log().empty());
    o.query(1);
    CHECK(o.queries_asked() == 1);
}

TEST_CASE("the two oracle kinds agree everywhere") {
    for (unsigned n = 0; n <= 4; ++n) {
        for (std::uint64_t w : test::enumerate_monotone(n)) {
            const MonotoneTable t(test::packed_to_table(w, n));
            TableOracle a(t);
            MinTrueOracle b(brute_min_true(t), t.dim());
            for (VecIndex k = 0; k < t.table().size(); ++k)
                CHECK(a.query(k) == b.query(k));
        }
    }
}

TEST_CASE("logged answers never violate monotonicity") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        const unsigned n = 2 + static_cast<unsigned>(rng() % 7);
        TableOracle o(test::random_monotone(n, rng, 3));
        for (int k = 0; k < 64; ++k) o.query(rng() & o.dim().last_index());
        const auto log = o.log();
        for (const auto& a : log)
            for (const auto& b : log)
                if (a.answer && !b.answer) CHECK_FALSE(precedes(a.position, b.position));
    }
}

TEST_CASE("non-monotone tables are rejected at the boundary") {
    CHECK_THROWS_AS(TableOracle(MonotoneTable(TruthTable::from_bit_string("0100"))),
                    std::invalid_argument);
}
