#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace powcol {

using Nat = std::uint64_t;
using Index = std::size_t;
using IndexSet = std::set<Index>;

/// A point of ^lambda kappa for finite lambda. Coordinates may be
/// unbounded naturals; the owning space decides whether a kappa bound
/// applies.
struct FinitePoint {
    std::vector<Nat> coords;

    FinitePoint() = default;
    explicit FinitePoint(std::vector<Nat> c) : coords(std::move(c)) {}

    static FinitePoint constant(Index lambda, Nat value) {
        return FinitePoint(std::vector<Nat>(lambda, value));
    }

    Index size() const { return coords.size(); }
    Nat operator[](Index i) const { return coords[i]; }

    friend auto operator<=>(const FinitePoint&, const FinitePoint&) = default;
};

/// Eventually-constant element of ^omega omega: a finite prefix followed by
/// a constant tail. Canonical form: the prefix never ends with an entry
/// equal to the tail, so structural equality is functional equality.
class TailPoint {
public:
    TailPoint() = default;
    TailPoint(std::vector<Nat> prefix, Nat tail);

    static TailPoint constant(Nat value) { return TailPoint({}, value); }

    Nat at(Index i) const { return i < prefix_.size() ? prefix_[i] : tail_; }
    const std::vector<Nat>& prefix() const { return prefix_; }
    Nat tail() const { return tail_; }

    friend bool operator==(const TailPoint&, const TailPoint&) = default;

private:
    std::vector<Nat> prefix_;
    Nat tail_ = 0;
};

/// A finite or cofinite subset of omega. `exceptions` is the set itself
/// when finite and its complement when cofinite.
struct CoSet {
    enum class Kind { Finite, Cofinite };

    Kind kind = Kind::Finite;
    IndexSet exceptions;

    static CoSet finite(IndexSet s) { return {Kind::Finite, std::move(s)}; }
    static CoSet cofinite(IndexSet s) { return {Kind::Cofinite, std::move(s)}; }
    static CoSet empty() { return finite({}); }
    static CoSet all() { return cofinite({}); }

    bool is_finite() const { return kind == Kind::Finite; }
    bool contains(Index i) const {
        bool ex = exceptions.contains(i);
        return is_finite() ? ex : !ex;
    }

    friend bool operator==(const CoSet&, const CoSet&) = default;
};

bool subset(const CoSet& a, const CoSet& b);    // a is a subset of b
bool disjoint(const CoSet& a, const CoSet& b);  // a and b do not intersect

/// The set of coordinates where x and y differ.
std::vector<Index> delta(const FinitePoint& x, const FinitePoint& y);
CoSet delta(const TailPoint& x, const TailPoint& y);

/// x and y differ at every coordinate.
bool totally_different(const FinitePoint& x, const FinitePoint& y);
bool totally_different(const TailPoint& x, const TailPoint& y);

enum class PairRelation { Coincide, TotallyDifferentOn, Neither };

PairRelation relation_on(const FinitePoint& x, const FinitePoint& y,
                         const IndexSet& a);
PairRelation relation_on(const TailPoint& x, const TailPoint& y,
                         const CoSet& a);

/// delta(x, y) is finite, i.e. the tails agree.
bool almost_equal(const TailPoint& x, const TailPoint& y);
/// The complement of delta(x, y) is finite, i.e. the tails differ.
bool almost_totally_different(const TailPoint& x, const TailPoint& y);

}  // namespace powcol
