#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "powcol/table.hpp"

namespace powcol {

struct PairWitness {
    FinitePoint x, y;
    friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

struct PointColorWitness {
    FinitePoint x;
    Nat beta;
    friend bool operator==(const PointColorWitness&,
                           const PointColorWitness&) = default;
};

struct ProperVerdict {
    bool ok;
    std::optional<PairWitness> witness;  // a totally-different same-color pair
};

struct TightVerdict {
    bool ok;
    std::optional<PointColorWitness> witness;
};

struct NuTightWitness {
    std::vector<FinitePoint> points;
    Nat beta;
};

struct NuTightVerdict {
    bool ok;
    std::optional<NuTightWitness> witness;
};

/// F(x) = permutation[x(coordinate)] for every x.
struct PrincipalForm {
    Index coordinate;
    std::vector<Nat> permutation;  // a bijection on [0, kappa)
    friend bool operator==(const PrincipalForm&, const PrincipalForm&) = default;
};

/// F(x) = class_map[x(coordinate)]; class_map is injective onto Ran(F).
struct FactorClassification {
    Index coordinate;
    std::vector<Nat> class_map;
    friend bool operator==(const FactorClassification&,
                           const FactorClassification&) = default;
};

/// For a candidate coordinate, a pair with F(x)=F(y) xor x(i)=y(i).
struct FactorViolation {
    Index coordinate;
    FinitePoint x, y;
};

/// No totally-different pair shares a color. On failure the witness is the
/// first violating pair in (enc, enc) order.
ProperVerdict is_proper(const ColoringTable& table);

/// No totally-different pair inside the set.
bool is_lawful(std::span<const FinitePoint> points);
/// Lawful, and every point outside has a totally-different partner inside.
bool is_maximal_lawful(std::span<const FinitePoint> points,
                       const SpaceSig& sig);

/// For every x and every color beta != F(x) some y totally different from x
/// has F(y) = beta. Colors outside Ran(F) make this false.
TightVerdict is_tight(const ColoringTable& table);

/// Tightness quantified over c in C only; requires Ran(F) within C.
bool is_c_tight(const ColoringTable& table, const std::set<Nat>& c);

/// For every length-nu sequence of points and every color missed by all of
/// them, some point totally different from all of them takes that color.
NuTightVerdict is_nu_tight(const ColoringTable& table, Nat nu);

/// For every x and beta < F(x) some y totally different from x has
/// F(y) = beta (no single-point lowering stays proper).
TightVerdict is_minimal(const ColoringTable& table);

/// F(c_alpha) = alpha for every constant point.
bool is_strongly_uniform(const ColoringTable& table);

/// Searches for pairwise totally-different r_0..r_{kappa-1} with
/// F(r_alpha) = alpha. Candidates are tried in enc order, colors ascending;
/// the first witness found is returned, or nothing if the search exhausts.
std::optional<std::vector<FinitePoint>> is_weakly_uniform(
    const ColoringTable& table);

/// Finds (i, pi) with F(x) = pi(x(i)) for all x, if any. Requires mu = kappa.
std::optional<PrincipalForm> extract_principal_form(const ColoringTable& table);

/// Searches for a coordinate i with F(x)=F(y) iff x(i)=y(i) for all pairs.
/// On failure returns one violating pair per candidate coordinate.
/// Precondition: the table is proper.
std::variant<FactorClassification, std::vector<FactorViolation>>
classify_2tight(const ColoringTable& table);

/// Asserts F(y) in {F(x_0),...,F(x_{n-1})} for a coordinatewise mix y of the
/// x_k. Throws if y is not such a mix.
bool mix_closure_check(const ColoringTable& table,
                       std::span<const FinitePoint> xs, const FinitePoint& y);

/// Backtracking generator that yields exactly the proper colorings of the
/// space, each once, in lexicographic order of their color arrays. Throws
/// once more than `budget` partial assignments have been explored.
void enumerate_proper(const SpaceSig& sig,
                      const std::function<void(const ColoringTable&)>& emit,
                      std::uint64_t budget = 100'000'000);

std::vector<ColoringTable> oracle_enumerate_proper(
    const SpaceSig& sig, std::uint64_t budget = 100'000'000);

}  // namespace powcol
