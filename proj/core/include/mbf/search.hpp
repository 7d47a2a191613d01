#pragma once

#include <optional>

#include "mbf/knowledge.hpp"
#include "mbf/oracle.hpp"

namespace mbf {

/// Inclusive index window for a bisection search.
struct SearchWindow {
    VecIndex left;
    VecIndex right;
};

enum class ConstantFn { zero, one };

enum class SearchKind { first_min_true, last_max_false };

struct SearchResult {
    VecIndex position;
    SearchKind kind;
    /// Set only when the optional disambiguation query ran and exposed a
    /// constant function, in which case position is meaningless.
    std::optional<ConstantFn> constant;
};

/// Bisection for the lexicographically first minimal true vector over the
/// whole cube. Asks exactly n membership queries for any non-constant
/// function; the optional extra query tells the constant-zero function apart.
SearchResult search_first_simple(MembershipOracle& o, bool disambiguate = false);

/// Mirror bisection for the lexicographically last maximal false vector;
/// the optional extra query tells the constant-one function apart.
SearchResult search_last_simple(MembershipOracle& o, bool disambiguate = false);

/// Knowledge-consulting bisection over an arbitrary window: a membership
/// query is asked only where the store cannot decide the value. Every
/// queried zero registers a clause; when any probe had to be queried with
/// answer one, the final position is registered as an implicant.
VecIndex search_first_ext(MembershipOracle& o, KnowledgeStore& k, SearchWindow w);

/// Mirror of search_first_ext: queried ones register implicants, and a
/// queried zero makes the final position register as a clause.
VecIndex search_last_ext(MembershipOracle& o, KnowledgeStore& k, SearchWindow w);

enum class VectorKind { min_true, max_false };

struct DescentResult {
    VecIndex position;
    VectorKind kind;
};

/// Coordinate-descent baseline: from any start vector, walks coordinates in
/// increasing coordinate order and returns a minimal true vector (when the
/// start is true) or a maximal false vector (when it is false), using at
/// most n + 1 membership queries.
DescentResult gainanov_descend(MembershipOracle& o, VecIndex start);

}  // namespace mbf
