#include "powcol/point.hpp"

#include <algorithm>
#include <stdexcept>

namespace powcol {

TailPoint::TailPoint(std::vector<Nat> prefix, Nat tail)
    : prefix_(std::move(prefix)), tail_(tail) {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
}

bool subset(const CoSet& a, const CoSet& b) {
    if (a.is_finite()) {
        return std::ranges::all_of(a.exceptions,
                                   [&](Index i) { return b.contains(i); });
    }
    if (b.is_finite()) return false;  // a cofinite set is infinite
    return std::ranges::all_of(b.exceptions,
                               [&](Index i) { return !a.contains(i); });
}

bool disjoint(const CoSet& a, const CoSet& b) {
    if (a.is_finite()) {
        return std::ranges::none_of(a.exceptions,
                                    [&](Index i) { return b.contains(i); });
    }
    if (b.is_finite()) return disjoint(b, a);
    return false;  // two cofinite sets always intersect
}

namespace {

void require_same_space(const FinitePoint& x, const FinitePoint& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("points from different spaces");
}

}  // namespace

std::vector<Index> delta(const FinitePoint& x, const FinitePoint& y) {
    require_same_space(x, y);
    std::vector<Index> out;
    for (Index i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) out.push_back(i);
    return out;
}

CoSet delta(const TailPoint& x, const TailPoint& y) {
    Index span = std::max(x.prefix().size(), y.prefix().size());
    IndexSet diff, same;
    for (Index i = 0; i < span; ++i) {
        if (x.at(i) != y.at(i))
            diff.insert(i);
        else
            same.insert(i);
    }
    // Beyond the prefixes both points sit on their tails.
    if (x.tail() == y.tail()) return CoSet::finite(std::move(diff));
    return CoSet::cofinite(std::move(same));
}

bool totally_different(const FinitePoint& x, const FinitePoint& y) {
    require_same_space(x, y);
    for (Index i = 0; i < x.size(); ++i)
        if (x[i] == y[i]) return false;
    return true;
}

bool totally_different(const TailPoint& x, const TailPoint& y) {
    return delta(x, y) == CoSet::all();
}

PairRelation relation_on(const FinitePoint& x, const FinitePoint& y,
                         const IndexSet& a) {
    require_same_space(x, y);
    if (!a.empty() && *a.rbegin() >= x.size())
        throw std::invalid_argument("index set not within the space");
    bool all_differ = true, none_differ = true;
    for (Index i : a) {
        if (x[i] != y[i])
            none_differ = false;
        else
            all_differ = false;
    }
    if (none_differ) return PairRelation::Coincide;
    if (all_differ) return PairRelation::TotallyDifferentOn;
    return PairRelation::Neither;
}

PairRelation relation_on(const TailPoint& x, const TailPoint& y,
                         const CoSet& a) {
    CoSet d = delta(x, y);
    if (disjoint(d, a)) return PairRelation::Coincide;
    if (subset(a, d)) return PairRelation::TotallyDifferentOn;
    return PairRelation::Neither;
}

bool almost_equal(const TailPoint& x, const TailPoint& y) {
    return x.tail() == y.tail();
}

bool almost_totally_different(const TailPoint& x, const TailPoint& y) {
    return x.tail() != y.tail();
}

}  // namespace powcol
