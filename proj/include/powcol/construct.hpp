#pragma once

#include <functional>
#include <map>
#include <span>

#include "powcol/table.hpp"

namespace powcol {

/// pair(a, b) = (a+b)(a+b+1)/2 + b, the canonical pairing bijection.
Nat cantor_pair(Nat a, Nat b);

/// A structured color: a piece tag plus a tuple payload. The canonical
/// integer form is pair(tag, fold(payload)) with the payload folded
/// right-to-left by cantor_pair.
struct ColorCode {
    Nat tag = 0;
    std::vector<Nat> payload;

    Nat int_code() const;
    friend bool operator==(const ColorCode&, const ColorCode&) = default;
};

/// A pure evaluator for colorings of ^omega omega on the eventually-constant
/// fragment. dependency_bound(x) is an index d such that the color of x
/// depends only on coordinates below d.
struct LazyColoring {
    std::function<ColorCode(const TailPoint&)> color;
    std::function<Index(const TailPoint&)> dependency_bound;
};

/// The trivial coloring F(x) = pi(x(i)).
ColoringTable trivial(const SpaceSig& sig, Index i, std::span<const Nat> pi);

/// The parity coloring of ^{2k+1} omega: the color of x records
/// (floor(x(0)/2), ..., floor(x(2k)/2)) and the parity of the coordinate
/// sum. Coordinates at and beyond 2k+1 are ignored. `tag` selects the
/// code block the colors live in.
LazyColoring parity_coloring(Index k, Nat tag = 0);
ColorCode parity_color(Index k, const FinitePoint& x, Nat tag = 0);

/// Truncation of the parity coloring to ^{2k+1} m for even m, with the used
/// codes relabelled densely by rank order.
ColoringTable parity_table(Index k, Nat m);

/// Lift a coloring on coordinates X to a larger index set by restriction:
/// G(x) = F(x restricted to X).
ColoringTable cylinder_extend(const ColoringTable& base,
                              std::span<const Index> x_coords, Index lambda);
LazyColoring cylinder_extend(const ColoringTable& base,
                             std::span<const Index> x_coords);

/// h o F for a bijection h on [0, mu).
ColoringTable recolor(const ColoringTable& table, std::span<const Nat> h);

/// Extend a partial proper coloring G (given on enc indices of A) to a
/// total proper coloring preserving G's coincidence pattern on A. Colors
/// land in two disjoint blocks of size max(|Ran(G)|, kappa): F = h1(G(x))
/// on A and F = h2(x(0)) elsewhere.
ColoringTable extend_partial(const SpaceSig& sig,
                             const std::map<std::size_t, Nat>& partial);

struct PartitionPiece {
    std::function<bool(const TailPoint&)> member;
    LazyColoring coloring;
};

/// A coloring partition: disjoint pieces covering the domain, each carried
/// by its own coloring. Membership violations surface at evaluation.
struct PartitionSpec {
    std::vector<PartitionPiece> pieces;
};

LazyColoring partition_induced(PartitionSpec spec);

/// The composite tight coloring of ^omega omega that depends on no finite
/// coordinate set: piece i holds the points with x(0) in {2i, 2i+1} and is
/// colored by the tag-i parity coloring of depth 2i+1.
LazyColoring theorem10_coloring();

/// Rank of a valid theorem10 color code among all such codes in increasing
/// int_code order; a bijection from the composite's range onto omega.
Nat rank_in_B(const ColorCode& code);
bool is_valid_theorem10_code(const ColorCode& code);

/// Length-m vectors coding the prefixes of t distinct binary branches:
/// x_r(n) = 2^n + (value of the first n bits of r). Any two outputs agree
/// up to the branches' first disagreement and differ from there on.
std::vector<std::vector<Nat>> almost_disjoint_family(Index m, std::size_t t);

/// Greedy pointwise descent to a minimal proper coloring below the input:
/// sweep points in enc order, lowering each to the smallest color that
/// keeps the table proper, until a fixpoint.
ColoringTable minimize(const ColoringTable& table);

}  // namespace powcol
