#include "mbf/search.hpp"

namespace mbf {

SearchResult search_first_simple(MembershipOracle& o, bool disambiguate) {
    VecIndex left = 0;
    VecIndex right = o.dim().last_index();
    while (left < right) {
        const VecIndex m = (left + right) / 2;
        if (o.query(m))
            right = m;
        else
            left = m + 1;
    }
    SearchResult r{left, SearchKind::first_min_true, std::nullopt};
    if (disambiguate && !o.query(left)) r.constant = ConstantFn::zero;
    return r;
}

SearchResult search_last_simple(MembershipOracle& o, bool disambiguate) {
    VecIndex left = 0;
    VecIndex right = o.dim().last_index();
    while (left < right) {
        const VecIndex m = (left + right) / 2 + 1;
        if (o.query(m))
            right = m - 1;
        else
            left = m;
    }
    SearchResult r{right, SearchKind::last_max_false, std::nullopt};
    if (disambiguate && o.query(right)) r.constant = ConstantFn::one;
    return r;
}

namespace {

void check_window(const MembershipOracle& o, SearchWindow w) {
    if (w.left > w.right || w.right > o.dim().last_index())
        throw std::out_of_range("search: bad window");
}

}  // namespace

VecIndex search_first_ext(MembershipOracle& o, KnowledgeStore& k, SearchWindow w) {
    check_window(o, w);
    VecIndex left = w.left;
    VecIndex right = w.right;
    bool found = false;
    while (left < right) {
        const VecIndex m = (left + right) / 2;
        if (const auto v = k.fun_value(m)) {
            if (*v)
                right = m;
            else
                left = m + 1;
        } else if (o.query(m)) {
            right = m;
            found = true;
        } else {
            left = m + 1;
            k.reg_clause(m);
        }
    }
    if (found) k.reg_implicant(left);
    return left;
}

VecIndex search_last_ext(MembershipOracle& o, KnowledgeStore& k, SearchWindow w) {
    check_window(o, w);
    VecIndex left = w.left;
    VecIndex right = w.right;
    bool found = false;
    while (left < right) {
        const VecIndex m = (left + right) / 2 + 1;
        if (const auto v = k.fun_value(m)) {
            if (*v)
                right = m - 1;
            else
                left = m;
        } else if (o.query(m)) {
            right = m - 1;
            k.reg_implicant(m);
        } else {
            left = m;
            found = true;
        }
    }
    if (found) k.reg_clause(right);
    return right;
}

DescentResult gainanov_descend(MembershipOracle& o, VecIndex start) {
    const unsigned n = o.dim().value();
    if (start > o.dim().last_index())
        throw std::out_of_range("gainanov_descend: start outside the cube");
    VecIndex cur = start;
    if (o.query(start)) {
        // walk the ones of the start vector, first coordinate first
        for (unsigned b = n; b-- > 0;) {
            const VecIndex bit = VecIndex{1} << b;
            if (!(start & bit)) continue;
            const VecIndex cand = cur & ~bit;
            if (o.query(cand)) cur = cand;
        }
        return {cur, VectorKind::min_true};
    }
    for (unsigned b = n; b-- > 0;) {
        const VecIndex bit = VecIndex{1} << b;
        if (start & bit) continue;
        const VecIndex cand = cur | bit;
        if (!o.query(cand)) cur = cand;
    }
    return {cur, VectorKind::max_false};
}

}  // namespace mbf
