#include "powcol/construct.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>

#include "powcol/analysis.hpp"

namespace powcol {

Nat cantor_pair(Nat a, Nat b) {
    unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
    unsigned __int128 v = s * (s + 1) / 2 + b;
    if (v > std::numeric_limits<Nat>::max())
        throw std::overflow_error("pairing value overflows");
    return static_cast<Nat>(v);
}

Nat ColorCode::int_code() const {
    Nat fold = 0;
    bool first = true;
    for (auto it = payload.rbegin(); it != payload.rend(); ++it) {
        fold = first ? *it : cantor_pair(*it, fold);
        first = false;
    }
    return cantor_pair(tag, fold);
}

namespace {

void require_permutation(std::span<const Nat> pi, Nat domain) {
    if (pi.size() != domain)
        throw std::invalid_argument("permutation has wrong size");
    std::vector<bool> hit(domain, false);
    for (Nat v : pi) {
        if (v >= domain || hit[v])
            throw std::invalid_argument("not a bijection");
        hit[v] = true;
    }
}

}  // namespace

ColoringTable trivial(const SpaceSig& sig, Index i, std::span<const Nat> pi) {
    if (i >= sig.lambda()) throw std::invalid_argument("coordinate >= lambda");
    if (sig.mu() != sig.kappa())
        throw std::invalid_argument("trivial coloring needs mu = kappa");
    require_permutation(pi, sig.kappa());
    std::vector<Nat> colors(sig.point_count());
    for (std::size_t n = 0; n < colors.size(); ++n)
        colors[n] = pi[dec(n, sig)[i]];
    return ColoringTable(sig, std::move(colors));
}

ColorCode parity_color(Index k, const FinitePoint& x, Nat tag) {
    const Index depth = 2 * k + 1;
    if (x.size() < depth)
        throw std::invalid_argument("point too short for parity depth");
    ColorCode code;
    code.tag = tag;
    Nat parity = 0;
    for (Index j = 0; j < depth; ++j) {
        code.payload.push_back(x[j] / 2);
        parity ^= x[j] & 1;
    }
    code.payload.push_back(parity);
    return code;
}

LazyColoring parity_coloring(Index k, Nat tag) {
    const Index depth = 2 * k + 1;
    LazyColoring out;
    out.color = [k, tag, depth](const TailPoint& x) {
        std::vector<Nat> coords(depth);
        for (Index j = 0; j < depth; ++j) coords[j] = x.at(j);
        return parity_color(k, FinitePoint(std::move(coords)), tag);
    };
    out.dependency_bound = [depth](const TailPoint&) { return depth; };
    return out;
}

ColoringTable parity_table(Index k, Nat m) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("truncation bound m must be even and >= 2");
    SpaceSig domain(2 * k + 1, m, 1);  // mu fixed after counting classes
    std::vector<Nat> codes(domain.point_count());
    for (std::size_t n = 0; n < codes.size(); ++n)
        codes[n] = parity_color(k, dec(n, domain)).int_code();
    std::vector<Nat> used(codes);
    std::ranges::sort(used);
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<Nat> colors(codes.size());
    for (std::size_t n = 0; n < codes.size(); ++n)
        colors[n] = std::ranges::lower_bound(used, codes[n]) - used.begin();
    return ColoringTable(SpaceSig(2 * k + 1, m, used.size()),
                         std::move(colors));
}

namespace {

void require_coordinate_set(std::span<const Index> x_coords, Index lambda,
                            Index base_lambda) {
    if (x_coords.empty()) throw std::invalid_argument("empty coordinate set");
    if (x_coords.size() != base_lambda)
        throw std::invalid_argument("coordinate set size must match base lambda");
    if (!std::ranges::is_sorted(x_coords) ||
        std::ranges::adjacent_find(x_coords) != x_coords.end())
        throw std::invalid_argument("coordinates must be strictly increasing");
    if (x_coords.back() >= lambda)
        throw std::invalid_argument("coordinate >= lambda");
}

}  // namespace

ColoringTable cylinder_extend(const ColoringTable& base,
                              std::span<const Index> x_coords, Index lambda) {
    require_coordinate_set(x_coords, lambda, base.sig().lambda());
    SpaceSig sig(lambda, base.sig().kappa(), base.sig().mu());
    std::vector<Nat> colors(sig.point_count());
    for (std::size_t n = 0; n < colors.size(); ++n) {
        FinitePoint x = dec(n, sig);
        std::vector<Nat> restricted;
        restricted.reserve(x_coords.size());
        for (Index j : x_coords) restricted.push_back(x[j]);
        colors[n] = base.eval(FinitePoint(std::move(restricted)));
    }
    return ColoringTable(sig, std::move(colors));
}

LazyColoring cylinder_extend(const ColoringTable& base,
                             std::span<const Index> x_coords) {
    require_coordinate_set(x_coords, x_coords.back() + 1,
                           base.sig().lambda());
    auto shared = std::make_shared<ColoringTable>(base);
    std::vector<Index> coords(x_coords.begin(), x_coords.end());
    Index bound = coords.back() + 1;
    LazyColoring out;
    out.color = [shared, coords](const TailPoint& x) {
        std::vector<Nat> restricted;
        restricted.reserve(coords.size());
        for (Index j : coords) restricted.push_back(x.at(j));
        return ColorCode{0, {shared->eval(FinitePoint(std::move(restricted)))}};
    };
    out.dependency_bound = [bound](const TailPoint&) { return bound; };
    return out;
}

ColoringTable recolor(const ColoringTable& table, std::span<const Nat> h) {
    require_permutation(h, table.sig().mu());
    std::vector<Nat> colors(table.colors());
    for (Nat& c : colors) c = h[c];
    return ColoringTable(table.sig(), std::move(colors));
}

ColoringTable extend_partial(const SpaceSig& sig,
                             const std::map<std::size_t, Nat>& partial) {
    std::vector<Nat> g_colors;
    for (const auto& [n, c] : partial) {
        if (n >= sig.point_count())
            throw std::invalid_argument("partial coloring index out of range");
        g_colors.push_back(c);
    }
    std::ranges::sort(g_colors);
    g_colors.erase(std::unique(g_colors.begin(), g_colors.end()),
                   g_colors.end());
    // partial properness of G on A
    for (auto a = partial.begin(); a != partial.end(); ++a)
        for (auto b = std::next(a); b != partial.end(); ++b)
            if (a->second == b->second &&
                totally_different(dec(a->first, sig), dec(b->first, sig)))
                throw std::invalid_argument("partial coloring is not proper");

    const Nat block = std::max<Nat>(g_colors.size(), sig.kappa());
    SpaceSig out_sig(sig.lambda(), sig.kappa(), 2 * block);
    std::vector<Nat> colors(out_sig.point_count());
    for (std::size_t n = 0; n < colors.size(); ++n) {
        auto it = partial.find(n);
        if (it != partial.end())
            colors[n] =
                std::ranges::lower_bound(g_colors, it->second) - g_colors.begin();
        else
            colors[n] = block + dec(n, sig)[0];
    }
    return ColoringTable(out_sig, std::move(colors));
}

LazyColoring partition_induced(PartitionSpec spec) {
    auto shared = std::make_shared<PartitionSpec>(std::move(spec));
    auto find_piece = [shared](const TailPoint& x) -> const PartitionPiece& {
        const PartitionPiece* found = nullptr;
        for (const auto& piece : shared->pieces) {
            if (!piece.member(x)) continue;
            if (found)
                throw std::runtime_error("point belongs to two pieces");
            found = &piece;
        }
        if (!found) throw std::runtime_error("point belongs to no piece");
        return *found;
    };
    LazyColoring out;
    out.color = [find_piece](const TailPoint& x) {
        return find_piece(x).coloring.color(x);
    };
    out.dependency_bound = [find_piece](const TailPoint& x) {
        return find_piece(x).coloring.dependency_bound(x);
    };
    return out;
}

LazyColoring theorem10_coloring() {
    LazyColoring out;
    out.color = [](const TailPoint& x) {
        Nat i = x.at(0) / 2;
        ColorCode code;
        code.tag = i;
        Nat parity = 0;
        for (Nat j = 0; j <= 2 * i; ++j) {
            code.payload.push_back(x.at(j) / 2);
            parity ^= x.at(j) & 1;
        }
        code.payload.push_back(parity);
        return code;
    };
    out.dependency_bound = [](const TailPoint& x) {
        return static_cast<Index>(2 * (x.at(0) / 2) + 1);
    };
    return out;
}

bool is_valid_theorem10_code(const ColorCode& code) {
    return code.payload.size() == 2 * code.tag + 2 &&
           code.payload[0] == code.tag && code.payload.back() < 2;
}

namespace {

constexpr Nat kSaturated = std::numeric_limits<Nat>::max();

// Pairing that clamps instead of throwing; values past the Nat range only
// ever get compared against bounds, so "huge" is all we need to know.
Nat pair_saturating(Nat a, Nat b) {
    if (a == kSaturated || b == kSaturated) return kSaturated;
    unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
    unsigned __int128 v = s * (s + 1) / 2 + b;
    return v >= kSaturated ? kSaturated : static_cast<Nat>(v);
}

Nat int_code_saturating(Nat tag, const std::vector<Nat>& payload) {
    Nat fold = 0;
    bool first = true;
    for (auto it = payload.rbegin(); it != payload.rend(); ++it) {
        fold = first ? *it : pair_saturating(*it, fold);
        first = false;
    }
    return pair_saturating(tag, fold);
}

// Count valid codes with the given tag whose int_code is below `bound`.
// Payload entries are chosen left to right; folding is monotone in every
// entry, so once the all-zero completion reaches the bound the scan stops.
Nat count_tag_codes_below(Nat tag, Nat bound, std::vector<Nat>& payload,
                          std::size_t pos) {
    const std::size_t len = 2 * tag + 2;
    if (pos == len)
        return int_code_saturating(tag, payload) < bound ? 1 : 0;
    const Nat max_value = pos == len - 1 ? 1 : kSaturated - 1;
    Nat count = 0;
    for (Nat v = 0; v <= max_value; ++v) {
        payload[pos] = v;
        for (std::size_t j = pos + 1; j < len; ++j) payload[j] = 0;
        if (int_code_saturating(tag, payload) >= bound) break;
        count += count_tag_codes_below(tag, bound, payload, pos + 1);
    }
    payload[pos] = 0;
    return count;
}

}  // namespace

Nat rank_in_B(const ColorCode& code) {
    if (!is_valid_theorem10_code(code))
        throw std::invalid_argument("color code is not in the composite range");
    const Nat bound = code.int_code();
    Nat rank = 0;
    for (Nat tag = 0;; ++tag) {
        std::vector<Nat> payload(2 * tag + 2, 0);
        payload[0] = tag;
        if (int_code_saturating(tag, payload) >= bound) break;
        rank += count_tag_codes_below(tag, bound, payload, 1);
    }
    return rank;
}

std::vector<std::vector<Nat>> almost_disjoint_family(Index m, std::size_t t) {
    if (m < 1 || m > 62) throw std::invalid_argument("depth out of range");
    if (t > (std::size_t{1} << m))
        throw std::invalid_argument("more branches requested than 2^m");
    std::vector<std::vector<Nat>> out;
    out.reserve(t);
    for (std::size_t v = 0; v < t; ++v) {
        std::vector<Nat> x(m);
        for (Index n = 0; n < m; ++n) {
            // code of the first n branch bits (bit j of v is branch bit j)
            x[n] = (Nat{1} << n) + (v & ((Nat{1} << n) - 1));
        }
        out.push_back(std::move(x));
    }
    return out;
}

ColoringTable minimize(const ColoringTable& table) {
    if (!is_proper(table).ok)
        throw std::invalid_argument("minimize requires a proper table");
    const SpaceSig& sig = table.sig();
    std::vector<FinitePoint> pts;
    pts.reserve(sig.point_count());
    for (std::size_t n = 0; n < sig.point_count(); ++n)
        pts.push_back(dec(n, sig));
    std::vector<std::vector<std::size_t>> adjacent(pts.size());
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (totally_different(pts[a], pts[b])) {
                adjacent[a].push_back(b);
                adjacent[b].push_back(a);
            }
    std::vector<Nat> colors(table.colors());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t n = 0; n < pts.size(); ++n) {
            for (Nat c = 0; c < colors[n]; ++c) {
                bool clash = std::ranges::any_of(
                    adjacent[n],
                    [&](std::size_t m) { return colors[m] == c; });
                if (!clash) {
                    colors[n] = c;
                    changed = true;
                    break;
                }
            }
        }
    }
    return ColoringTable(sig, std::move(colors));
}

}  // namespace powcol
