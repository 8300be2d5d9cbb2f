#include "powcol/descriptor.hpp"

#include <stdexcept>

#include <json.hpp>

namespace powcol {

namespace {

using nlohmann::json;

std::string kind_of(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind"))
        throw std::invalid_argument("descriptor must be an object with a kind");
    return doc.at("kind").get<std::string>();
}

bool is_lazy(const json& doc) {
    std::string kind = kind_of(doc);
    if (kind == "theorem10" || kind == "partition") return true;
    if (kind == "parity") return !doc.contains("m");
    return false;
}

ColoringTable build_table(const json& doc) {
    std::string kind = kind_of(doc);
    if (kind == "trivial") {
        SpaceSig sig(doc.at("lambda").get<Index>(), doc.at("kappa").get<Nat>(),
                     doc.at("kappa").get<Nat>());
        auto pi = doc.at("pi").get<std::vector<Nat>>();
        return trivial(sig, doc.at("i").get<Index>(), pi);
    }
    if (kind == "parity") {
        if (!doc.contains("m"))
            throw std::invalid_argument(
                "parity descriptor needs a truncation bound m for table form");
        return parity_table(doc.at("k").get<Index>(), doc.at("m").get<Nat>());
    }
    if (kind == "cylinder") {
        ColoringTable base = build_table(doc.at("base"));
        auto coords = doc.at("x").get<std::vector<Index>>();
        return cylinder_extend(base, coords, doc.at("lambda").get<Index>());
    }
    if (kind == "recolor") {
        ColoringTable base = build_table(doc.at("base"));
        auto perm = doc.at("perm").get<std::vector<Nat>>();
        return recolor(base, perm);
    }
    if (kind == "theorem10" || kind == "partition")
        throw std::invalid_argument(
            "descriptor '" + kind + "' has an infinite domain; use lazy evaluation");
    throw std::invalid_argument("unknown descriptor kind: " + kind);
}

LazyColoring build_lazy(const json& doc) {
    std::string kind = kind_of(doc);
    if (kind == "theorem10") return theorem10_coloring();
    if (kind == "parity") {
        Nat tag = doc.contains("tag") ? doc.at("tag").get<Nat>() : 0;
        return parity_coloring(doc.at("k").get<Index>(), tag);
    }
    if (kind == "partition") {
        PartitionSpec spec;
        for (const json& piece : doc.at("pieces")) {
            auto x0_values = piece.at("x0").get<std::set<Nat>>();
            PartitionPiece p;
            p.member = [x0_values](const TailPoint& x) {
                return x0_values.contains(x.at(0));
            };
            p.coloring = build_lazy(piece.at("coloring"));
            spec.pieces.push_back(std::move(p));
        }
        return partition_induced(std::move(spec));
    }
    if (kind == "cylinder") {
        ColoringTable base = build_table(doc.at("base"));
        auto coords = doc.at("x").get<std::vector<Index>>();
        return cylinder_extend(base, coords);
    }
    throw std::invalid_argument("descriptor '" + kind +
                                "' does not support lazy evaluation");
}

}  // namespace

bool descriptor_is_lazy(const std::string& text) {
    return is_lazy(json::parse(text));
}

ColoringTable table_from_descriptor(const std::string& text) {
    return build_table(json::parse(text));
}

LazyColoring lazy_from_descriptor(const std::string& text) {
    return build_lazy(json::parse(text));
}

}  // namespace powcol
