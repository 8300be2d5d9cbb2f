#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "powcol/analysis.hpp"
#include "powcol/descriptor.hpp"
#include "powcol/table.hpp"

namespace {

using namespace powcol;
using nlohmann::json;

constexpr int kExitAllTrue = 0;
constexpr int kExitSomeFalse = 1;
constexpr int kExitUsage = 2;

json point_json(const FinitePoint& p) { return json(p.coords); }

json pair_json(const PairWitness& w) {
    return json::array({point_json(w.x), point_json(w.y)});
}

json point_color_json(const PointColorWitness& w) {
    return json{{"point", point_json(w.x)}, {"beta", w.beta}};
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Nat> parse_nat_list(const std::string& text) {
    std::vector<Nat> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoull(item));
    return out;
}

SpaceSig parse_sig(const std::string& text) {
    auto parts = parse_nat_list(text);
    if (parts.size() != 3)
        throw std::invalid_argument("--sig expects L,K,M");
    return SpaceSig(static_cast<Index>(parts[0]), parts[1], parts[2]);
}

// "a,b,c" is a FinitePoint; "a,b;t" (tail after the semicolon) a TailPoint.
bool point_is_tail(const std::string& text) {
    return text.find(';') != std::string::npos;
}

TailPoint parse_tail_point(const std::string& text) {
    auto semi = text.find(';');
    std::vector<Nat> prefix = parse_nat_list(text.substr(0, semi));
    Nat tail = std::stoull(text.substr(semi + 1));
    return TailPoint(std::move(prefix), tail);
}

FinitePoint parse_finite_point(const std::string& text) {
    return FinitePoint(parse_nat_list(text));
}

struct Report {
    json verdicts = json::object();
    json witnesses = json::object();

    void record(const std::string& name, bool ok, json witness = nullptr) {
        verdicts[name] = ok;
        if (!ok && !witness.is_null()) witnesses[name] = std::move(witness);
    }

    bool all_true() const {
        for (const auto& [k, v] : verdicts.items())
            if (!v.get<bool>()) return false;
        return true;
    }

    void print(const std::string& command) const {
        json doc{{"command", command},
                 {"verdicts", verdicts},
                 {"witnesses", witnesses}};
        std::cout << doc.dump() << '\n';
    }
};

// Witness for a failed C-tightness check: either a used color outside C or
// the first (point, beta) pair in enc order with no totally different
// partner of color beta.
json c_tight_witness(const ColoringTable& table, const std::set<Nat>& c) {
    const SpaceSig& sig = table.sig();
    for (std::size_t n = 0; n < sig.point_count(); ++n) {
        FinitePoint x = dec(n, sig);
        if (!c.contains(table.at(n)))
            return json{{"point", point_json(x)}, {"color", table.at(n)}};
        for (Nat beta : c) {
            if (beta == table.at(n)) continue;
            bool found = false;
            for (std::size_t m = 0; m < sig.point_count() && !found; ++m)
                found = table.at(m) == beta &&
                        totally_different(x, dec(m, sig));
            if (!found) return json{{"point", point_json(x)}, {"beta", beta}};
        }
    }
    return json();
}

json strong_uniform_witness(const ColoringTable& table) {
    for (Nat alpha = 0; alpha < table.sig().kappa(); ++alpha) {
        FinitePoint c = FinitePoint::constant(table.sig().lambda(), alpha);
        if (table.eval(c) != alpha)
            return json{{"alpha", alpha}, {"color", table.eval(c)}};
    }
    return json();
}

void run_property(Report& report, const ColoringTable& table,
                  const std::string& prop, std::uint64_t seed, bool has_seed) {
    if (prop == "proper") {
        auto v = is_proper(table);
        report.record(prop, v.ok, v.witness ? pair_json(*v.witness) : json());
    } else if (prop == "tight") {
        auto v = is_tight(table);
        report.record(prop, v.ok,
                      v.witness ? point_color_json(*v.witness) : json());
    } else if (prop == "ctight") {
        bool ok = is_c_tight(table, table.used_colors());
        report.record(prop, ok,
                      ok ? json() : c_tight_witness(table, table.used_colors()));
    } else if (prop.starts_with("nu-tight:")) {
        Nat nu = std::stoull(prop.substr(9));
        auto v = is_nu_tight(table, nu);
        json w;
        if (v.witness) {
            w = json{{"points", json::array()}, {"beta", v.witness->beta}};
            for (const auto& p : v.witness->points)
                w["points"].push_back(point_json(p));
        }
        report.record(prop, v.ok, std::move(w));
    } else if (prop == "minimal") {
        auto v = is_minimal(table);
        report.record(prop, v.ok,
                      v.witness ? point_color_json(*v.witness) : json());
    } else if (prop == "strong-uniform") {
        bool ok = is_strongly_uniform(table);
        report.record(prop, ok, ok ? json() : strong_uniform_witness(table));
    } else if (prop == "weak-uniform") {
        auto clique = is_weakly_uniform(table);
        report.record(prop, clique.has_value(),
                      clique ? json() : json{{"search", "exhausted"}});
    } else if (prop == "lawful-classes") {
        bool all_maximal = true;
        json w;
        for (const auto& [color, members] : table.color_classes()) {
            if (!is_maximal_lawful(members, table.sig())) {
                all_maximal = false;
                w = json{{"color", color}};
                break;
            }
        }
        report.record(prop, all_maximal, std::move(w));
    } else if (prop.starts_with("mix-closure:")) {
        if (!has_seed)
            throw std::invalid_argument("mix-closure sampling requires --seed");
        std::size_t samples = std::stoull(prop.substr(12));
        std::mt19937_64 rng(seed);
        const SpaceSig& sig = table.sig();
        std::uniform_int_distribution<std::size_t> pick(
            0, sig.point_count() - 1);
        std::uniform_int_distribution<int> coin(0, 1);
        bool ok = true;
        json w;
        for (std::size_t s = 0; s < samples && ok; ++s) {
            FinitePoint x0 = dec(pick(rng), sig);
            FinitePoint x1 = dec(pick(rng), sig);
            std::vector<Nat> mixed(sig.lambda());
            for (Index i = 0; i < sig.lambda(); ++i)
                mixed[i] = coin(rng) ? x1[i] : x0[i];
            FinitePoint y(std::move(mixed));
            std::vector<FinitePoint> xs{x0, x1};
            if (!mix_closure_check(table, xs, y)) {
                ok = false;
                w = json{{"x0", point_json(x0)},
                         {"x1", point_json(x1)},
                         {"y", point_json(y)}};
            }
        }
        report.record(prop, ok, std::move(w));
    } else {
        throw std::invalid_argument("unknown property: " + prop);
    }
}

int cmd_gen(const std::string& desc_path, const std::string& out_path) {
    ColoringTable table = table_from_descriptor(read_file(desc_path));
    table.save(out_path);
    json doc{{"command", "gen"},
             {"out", out_path},
             {"points", table.sig().point_count()},
             {"mu", table.sig().mu()}};
    std::cout << doc.dump() << '\n';
    return kExitAllTrue;
}

int cmd_check(const std::string& table_path, const std::string& props,
              std::uint64_t seed, bool has_seed) {
    ColoringTable table = ColoringTable::load(table_path);
    Report report;
    std::stringstream ss(props);
    std::string prop;
    while (std::getline(ss, prop, ','))
        run_property(report, table, prop, seed, has_seed);
    report.print("check");
    return report.all_true() ? kExitAllTrue : kExitSomeFalse;
}

int cmd_classify(const std::string& table_path) {
    ColoringTable table = ColoringTable::load(table_path);
    json doc{{"command", "classify"}};
    if (table.sig().mu() == table.sig().kappa()) {
        if (auto form = extract_principal_form(table)) {
            doc["result"] = json{{"form", "principal"},
                                 {"coordinate", form->coordinate},
                                 {"permutation", form->permutation}};
            std::cout << doc.dump() << '\n';
            return kExitAllTrue;
        }
    }
    auto outcome = classify_2tight(table);
    if (auto* factor = std::get_if<FactorClassification>(&outcome)) {
        doc["result"] = json{{"form", "factor"},
                             {"coordinate", factor->coordinate},
                             {"class_map", factor->class_map}};
        std::cout << doc.dump() << '\n';
        return kExitAllTrue;
    }
    json violations = json::array();
    for (const auto& v : std::get<std::vector<FactorViolation>>(outcome))
        violations.push_back(json{{"coordinate", v.coordinate},
                                  {"x", point_json(v.x)},
                                  {"y", point_json(v.y)}});
    doc["result"] = json{{"form", "non_trivial"}, {"violations", violations}};
    std::cout << doc.dump() << '\n';
    return kExitSomeFalse;
}

int cmd_eval(const std::string& table_path, const std::string& desc_path,
             const std::string& point, bool with_rank) {
    if (table_path.empty() == desc_path.empty())
        throw std::invalid_argument("eval needs exactly one of --table/--desc");
    if (!table_path.empty()) {
        ColoringTable table = ColoringTable::load(table_path);
        std::cout << table.eval(parse_finite_point(point)) << '\n';
        return kExitAllTrue;
    }
    std::string text = read_file(desc_path);
    if (!descriptor_is_lazy(text)) {
        ColoringTable table = table_from_descriptor(text);
        std::cout << table.eval(parse_finite_point(point)) << '\n';
        return kExitAllTrue;
    }
    if (!point_is_tail(point))
        throw std::invalid_argument(
            "lazy colorings take tail points: \"p0,p1,...;tail\"");
    LazyColoring lazy = lazy_from_descriptor(text);
    ColorCode code = lazy.color(parse_tail_point(point));
    std::cout << code.int_code();
    if (with_rank) std::cout << ' ' << rank_in_B(code);
    std::cout << '\n';
    return kExitAllTrue;
}

int cmd_minimize(const std::string& table_path, const std::string& out_path) {
    ColoringTable table = ColoringTable::load(table_path);
    ColoringTable reduced = minimize(table);
    reduced.save(out_path);
    std::size_t lowered = 0;
    for (std::size_t n = 0; n < table.sig().point_count(); ++n)
        if (reduced.at(n) != table.at(n)) ++lowered;
    json doc{{"command", "minimize"},
             {"out", out_path},
             {"lowered_entries", lowered}};
    std::cout << doc.dump() << '\n';
    return kExitAllTrue;
}

int cmd_oracle(const std::string& sig_text, std::uint64_t budget) {
    SpaceSig sig = parse_sig(sig_text);
    std::size_t count = 0;
    enumerate_proper(
        sig,
        [&](const ColoringTable& t) {
            std::cout << t.to_json() << '\n';
            ++count;
        },
        budget);
    std::cerr << "proper colorings: " << count << '\n';
    return kExitAllTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, check and classify proper colorings of ^lambda kappa"};
    app.require_subcommand(1);

    std::string desc_path, table_path, out_path, props, point, sig_text;
    std::uint64_t seed = 0, budget = 100'000'000;
    bool with_rank = false;

    auto* gen = app.add_subcommand("gen", "build a table from a descriptor");
    gen->add_option("--desc", desc_path, "descriptor JSON path (- for stdin)")
        ->required();
    gen->add_option("--out", out_path, "output table path")->required();

    auto* check = app.add_subcommand("check", "run property checkers");
    check->add_option("table", table_path, "table JSON path")->required();
    check->add_option("--props", props, "comma-separated property list")
        ->required();
    auto* seed_opt = check->add_option("--seed", seed, "RNG seed for sampled properties");

    auto* classify = app.add_subcommand("classify", "report the strongest form");
    classify->add_option("table", table_path, "table JSON path")->required();

    auto* eval = app.add_subcommand("eval", "evaluate a coloring at a point");
    eval->add_option("--table", table_path, "table JSON path");
    eval->add_option("--desc", desc_path, "descriptor JSON path");
    eval->add_option("--point", point, "point: \"a,b,c\" or \"a,b;t\"")
        ->required();
    eval->add_flag("--rank", with_rank, "also print rank_in_B for theorem10");

    auto* minimize = app.add_subcommand("minimize", "greedy descent to a minimal table");
    minimize->add_option("table", table_path, "table JSON path")->required();
    minimize->add_option("--out", out_path, "output table path")->required();

    auto* oracle = app.add_subcommand("oracle", "stream all proper tables of a space");
    oracle->add_option("--sig", sig_text, "space signature L,K,M")->required();
    oracle->add_option("--budget", budget, "enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    auto start = std::chrono::steady_clock::now();
    int status = kExitUsage;
    try {
        if (gen->parsed()) status = cmd_gen(desc_path, out_path);
        else if (check->parsed())
            status = cmd_check(table_path, props, seed, seed_opt->count() > 0);
        else if (classify->parsed()) status = cmd_classify(table_path);
        else if (eval->parsed())
            status = cmd_eval(table_path, desc_path, point, with_rank);
        else if (minimize->parsed()) status = cmd_minimize(table_path, out_path);
        else if (oracle->parsed()) status = cmd_oracle(sig_text, budget);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed_ms " << elapsed.count() << '\n';
    return status;
}
