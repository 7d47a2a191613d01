#include "mbf/knowledge.hpp"

#include <algorithm>

namespace mbf {

void KnowledgeStore::check_range(VecIndex idx) const {
    if (idx > n_.last_index())
        throw std::out_of_range("KnowledgeStore: index outside the cube");
}

std::optional<bool> KnowledgeStore::fun_value(VecIndex pos) const {
    check_range(pos);
    for (VecIndex i : tpi_)
        if (precedes(i, pos)) return true;
    for (VecIndex j : tpc_)
        if (precedes(pos, j)) return false;
    return std::nullopt;
}

void KnowledgeStore::reg_implicant(VecIndex idx) {
    check_range(idx);
    if (on_register) on_register(true, idx);
    for (VecIndex j : tpc_)
        if (precedes(idx, j))
            throw std::logic_error(
                "KnowledgeStore: implicant contradicts a registered clause");
    for (VecIndex i : tpi_)
        if (precedes(i, idx)) return;  // absorbed by existing knowledge
    std::erase_if(tpi_, [idx](VecIndex i) { return precedes(idx, i); });
    tpi_.insert(std::lower_bound(tpi_.begin(), tpi_.end(), idx), idx);
    peak_tpi_ = std::max(peak_tpi_, tpi_.size());
}

void KnowledgeStore::reg_clause(VecIndex idx) {
    check_range(idx);
    if (on_register) on_register(false, idx);
    for (VecIndex i : tpi_)
        if (precedes(i, idx))
            throw std::logic_error(
                "KnowledgeStore: clause contradicts a registered implicant");
    for (VecIndex j : tpc_)
        if (precedes(idx, j)) return;
    std::erase_if(tpc_, [idx](VecIndex j) { return precedes(j, idx); });
    tpc_.insert(std::lower_bound(tpc_.begin(), tpc_.end(), idx), idx);
    peak_tpc_ = std::max(peak_tpc_, tpc_.size());
}

}  // namespace mbf
