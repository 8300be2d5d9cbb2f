#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "powcol/point.hpp"

namespace powcol {

/// The triple (lambda, kappa, mu) of a coloring F: ^lambda kappa -> mu.
/// Construction rejects signatures whose point count kappa^lambda would
/// overflow the platform index range.
class SpaceSig {
public:
    SpaceSig(Index lambda, Nat kappa, Nat mu);

    Index lambda() const { return lambda_; }
    Nat kappa() const { return kappa_; }
    Nat mu() const { return mu_; }
    std::size_t point_count() const { return count_; }

    friend bool operator==(const SpaceSig& a, const SpaceSig& b) {
        return a.lambda_ == b.lambda_ && a.kappa_ == b.kappa_ &&
               a.mu_ == b.mu_;
    }

private:
    Index lambda_;
    Nat kappa_;
    Nat mu_;
    std::size_t count_;
};

/// Mixed-radix encoding with coordinate 0 least significant:
/// enc(x) = sum x(j) * kappa^j.
std::size_t enc(const FinitePoint& x, const SpaceSig& sig);
FinitePoint dec(std::size_t n, const SpaceSig& sig);

/// An exhaustive coloring F: ^lambda kappa -> mu stored as a flat array
/// indexed by enc. Immutable after construction.
class ColoringTable {
public:
    ColoringTable(SpaceSig sig, std::vector<Nat> colors);

    const SpaceSig& sig() const { return sig_; }
    const std::vector<Nat>& colors() const { return colors_; }

    Nat eval(const FinitePoint& x) const;
    Nat at(std::size_t index) const { return colors_[index]; }

    /// Partition of the domain by color; unused colors are absent.
    std::map<Nat, std::vector<FinitePoint>> color_classes() const;

    /// The set of colors actually taken.
    std::set<Nat> used_colors() const;

    std::string to_json() const;
    static ColoringTable from_json(const std::string& text);
    void save(const std::string& path) const;
    static ColoringTable load(const std::string& path);

    friend bool operator==(const ColoringTable& a, const ColoringTable& b) {
        return a.sig_ == b.sig_ && a.colors_ == b.colors_;
    }

private:
    SpaceSig sig_;
    std::vector<Nat> colors_;
};

}  // namespace powcol
