#include "mbf/oracle.hpp"

namespace mbf {

MinTrueOracle::MinTrueOracle(std::vector<VecIndex> min_true, Dimension n, bool keep_log)
    : MembershipOracle(n, keep_log), min_true_(std::move(min_true)) {
    for (VecIndex i : min_true_)
        if (i > n.last_index())
            throw std::out_of_range("MinTrueOracle: index outside the cube");
    if (!is_antichain(min_true_))
        throw std::invalid_argument("MinTrueOracle: the minimal-true set must be an antichain");
}

}  // namespace mbf
