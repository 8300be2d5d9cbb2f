#include "powcol/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace powcol {

namespace {

std::vector<FinitePoint> all_points(const SpaceSig& sig) {
    std::vector<FinitePoint> pts;
    pts.reserve(sig.point_count());
    for (std::size_t n = 0; n < sig.point_count(); ++n)
        pts.push_back(dec(n, sig));
    return pts;
}

}  // namespace

ProperVerdict is_proper(const ColoringTable& table) {
    auto pts = all_points(table.sig());
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (table.at(a) == table.at(b) &&
                totally_different(pts[a], pts[b]))
                return {false, PairWitness{pts[a], pts[b]}};
    return {true, std::nullopt};
}

bool is_lawful(std::span<const FinitePoint> points) {
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            if (totally_different(points[a], points[b])) return false;
    return true;
}

bool is_maximal_lawful(std::span<const FinitePoint> points,
                       const SpaceSig& sig) {
    if (!is_lawful(points)) return false;
    std::vector<bool> member(sig.point_count(), false);
    for (const auto& p : points) member[enc(p, sig)] = true;
    for (std::size_t n = 0; n < sig.point_count(); ++n) {
        if (member[n]) continue;
        FinitePoint x = dec(n, sig);
        bool extendable = std::ranges::none_of(points, [&](const auto& y) {
            return totally_different(x, y);
        });
        if (extendable) return false;
    }
    return true;
}

TightVerdict is_tight(const ColoringTable& table) {
    auto pts = all_points(table.sig());
    for (std::size_t n = 0; n < pts.size(); ++n) {
        for (Nat beta = 0; beta < table.sig().mu(); ++beta) {
            if (beta == table.at(n)) continue;
            bool found = false;
            for (std::size_t m = 0; m < pts.size() && !found; ++m)
                found = table.at(m) == beta &&
                        totally_different(pts[n], pts[m]);
            if (!found) return {false, PointColorWitness{pts[n], beta}};
        }
    }
    return {true, std::nullopt};
}

bool is_c_tight(const ColoringTable& table, const std::set<Nat>& c) {
    for (Nat color : table.used_colors())
        if (!c.contains(color)) return false;
    auto pts = all_points(table.sig());
    for (std::size_t n = 0; n < pts.size(); ++n) {
        for (Nat beta : c) {
            if (beta == table.at(n)) continue;
            bool found = false;
            for (std::size_t m = 0; m < pts.size() && !found; ++m)
                found = table.at(m) == beta &&
                        totally_different(pts[n], pts[m]);
            if (!found) return false;
        }
    }
    return true;
}

NuTightVerdict is_nu_tight(const ColoringTable& table, Nat nu) {
    if (nu < 1) throw std::invalid_argument("nu must be >= 1");
    auto pts = all_points(table.sig());
    const std::size_t n_points = pts.size();
    // Sequences are iterated as non-decreasing index tuples: repetition is
    // allowed and order within a sequence does not matter.
    std::vector<std::size_t> tuple(nu, 0);
    while (true) {
        for (Nat beta = 0; beta < table.sig().mu(); ++beta) {
            bool beta_taken = std::ranges::any_of(
                tuple, [&](std::size_t t) { return table.at(t) == beta; });
            if (beta_taken) continue;
            bool found = false;
            for (std::size_t m = 0; m < n_points && !found; ++m) {
                if (table.at(m) != beta) continue;
                found = std::ranges::all_of(tuple, [&](std::size_t t) {
                    return totally_different(pts[m], pts[t]);
                });
            }
            if (!found) {
                NuTightWitness w;
                for (std::size_t t : tuple) w.points.push_back(pts[t]);
                w.beta = beta;
                return {false, std::move(w)};
            }
        }
        // next non-decreasing tuple
        std::size_t pos = tuple.size();
        while (pos > 0 && tuple[pos - 1] == n_points - 1) --pos;
        if (pos == 0) break;
        std::size_t v = tuple[pos - 1] + 1;
        for (std::size_t j = pos - 1; j < tuple.size(); ++j) tuple[j] = v;
    }
    return {true, std::nullopt};
}

TightVerdict is_minimal(const ColoringTable& table) {
    auto pts = all_points(table.sig());
    for (std::size_t n = 0; n < pts.size(); ++n) {
        for (Nat beta = 0; beta < table.at(n); ++beta) {
            bool found = false;
            for (std::size_t m = 0; m < pts.size() && !found; ++m)
                found = table.at(m) == beta &&
                        totally_different(pts[n], pts[m]);
            if (!found) return {false, PointColorWitness{pts[n], beta}};
        }
    }
    return {true, std::nullopt};
}

bool is_strongly_uniform(const ColoringTable& table) {
    if (table.sig().mu() < table.sig().kappa())
        throw std::invalid_argument("strong uniformity needs mu >= kappa");
    for (Nat alpha = 0; alpha < table.sig().kappa(); ++alpha) {
        FinitePoint c = FinitePoint::constant(table.sig().lambda(), alpha);
        if (table.eval(c) != alpha) return false;
    }
    return true;
}

namespace {

bool weak_uniform_search(const ColoringTable& table,
                         const std::vector<FinitePoint>& pts,
                         std::vector<FinitePoint>& chosen, Nat alpha) {
    if (alpha == table.sig().kappa()) return true;
    for (std::size_t n = 0; n < pts.size(); ++n) {
        if (table.at(n) != alpha) continue;
        bool compatible = std::ranges::all_of(chosen, [&](const auto& r) {
            return totally_different(r, pts[n]);
        });
        if (!compatible) continue;
        chosen.push_back(pts[n]);
        if (weak_uniform_search(table, pts, chosen, alpha + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<FinitePoint>> is_weakly_uniform(
    const ColoringTable& table) {
    if (table.sig().mu() < table.sig().kappa())
        throw std::invalid_argument("weak uniformity needs mu >= kappa");
    auto pts = all_points(table.sig());
    std::vector<FinitePoint> chosen;
    if (weak_uniform_search(table, pts, chosen, 0)) return chosen;
    return std::nullopt;
}

std::optional<PrincipalForm> extract_principal_form(
    const ColoringTable& table) {
    const SpaceSig& sig = table.sig();
    if (sig.mu() != sig.kappa())
        throw std::invalid_argument("principal form needs mu = kappa");
    auto pts = all_points(sig);
    const Nat unset = sig.kappa();
    for (Index i = 0; i < sig.lambda(); ++i) {
        std::vector<Nat> pi(sig.kappa(), unset);
        bool consistent = true;
        for (std::size_t n = 0; n < pts.size() && consistent; ++n) {
            Nat v = pts[n][i];
            if (pi[v] == unset)
                pi[v] = table.at(n);
            else
                consistent = pi[v] == table.at(n);
        }
        if (!consistent) continue;
        std::vector<bool> hit(sig.kappa(), false);
        bool bijective = true;
        for (Nat v : pi) {
            if (v == unset || hit[v]) {
                bijective = false;
                break;
            }
            hit[v] = true;
        }
        if (bijective) return PrincipalForm{i, std::move(pi)};
    }
    return std::nullopt;
}

std::variant<FactorClassification, std::vector<FactorViolation>>
classify_2tight(const ColoringTable& table) {
    if (!is_proper(table).ok)
        throw std::invalid_argument("classify_2tight requires a proper table");
    const SpaceSig& sig = table.sig();
    auto pts = all_points(sig);
    std::vector<FactorViolation> violations;
    for (Index i = 0; i < sig.lambda(); ++i) {
        std::optional<FactorViolation> bad;
        for (std::size_t a = 0; a < pts.size() && !bad; ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                bool same_color = table.at(a) == table.at(b);
                bool same_value = pts[a][i] == pts[b][i];
                if (same_color != same_value) {
                    bad = FactorViolation{i, pts[a], pts[b]};
                    break;
                }
            }
        if (bad) {
            violations.push_back(std::move(*bad));
            continue;
        }
        std::vector<Nat> class_map(sig.kappa());
        for (Nat v = 0; v < sig.kappa(); ++v) {
            FinitePoint rep = FinitePoint::constant(sig.lambda(), v);
            class_map[v] = table.eval(rep);
        }
        return FactorClassification{i, std::move(class_map)};
    }
    return violations;
}

bool mix_closure_check(const ColoringTable& table,
                       std::span<const FinitePoint> xs, const FinitePoint& y) {
    if (xs.empty()) throw std::invalid_argument("need at least one point");
    for (Index i = 0; i < y.size(); ++i) {
        bool selected = std::ranges::any_of(
            xs, [&](const auto& x) { return x[i] == y[i]; });
        if (!selected)
            throw std::invalid_argument("y is not a coordinatewise mix");
    }
    Nat fy = table.eval(y);
    return std::ranges::any_of(
        xs, [&](const auto& x) { return table.eval(x) == fy; });
}

namespace {

struct ProperEnumerator {
    const SpaceSig& sig;
    const std::function<void(const ColoringTable&)>& emit;
    std::uint64_t budget;
    std::uint64_t used = 0;
    std::vector<FinitePoint> pts;
    std::vector<std::vector<std::size_t>> earlier_adjacent;
    std::vector<Nat> colors;

    ProperEnumerator(const SpaceSig& s,
                     const std::function<void(const ColoringTable&)>& e,
                     std::uint64_t b)
        : sig(s), emit(e), budget(b), pts(all_points(s)),
          earlier_adjacent(pts.size()), colors(pts.size(), 0) {
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b2 = 0; b2 < a; ++b2)
                if (totally_different(pts[a], pts[b2]))
                    earlier_adjacent[a].push_back(b2);
    }

    void run(std::size_t n) {
        if (n == pts.size()) {
            emit(ColoringTable(sig, colors));
            return;
        }
        for (Nat c = 0; c < sig.mu(); ++c) {
            if (++used > budget)
                throw std::runtime_error("proper-coloring enumeration budget exceeded");
            bool clash = std::ranges::any_of(
                earlier_adjacent[n],
                [&](std::size_t m) { return colors[m] == c; });
            if (clash) continue;
            colors[n] = c;
            run(n + 1);
        }
    }
};

}  // namespace

void enumerate_proper(const SpaceSig& sig,
                      const std::function<void(const ColoringTable&)>& emit,
                      std::uint64_t budget) {
    ProperEnumerator e(sig, emit, budget);
    e.run(0);
}

std::vector<ColoringTable> oracle_enumerate_proper(const SpaceSig& sig,
                                                   std::uint64_t budget) {
    std::vector<ColoringTable> out;
    enumerate_proper(
        sig, [&](const ColoringTable& t) { out.push_back(t); }, budget);
    return out;
}

}  // namespace powcol
