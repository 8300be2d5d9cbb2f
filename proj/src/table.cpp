#include "powcol/table.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace powcol {

SpaceSig::SpaceSig(Index lambda, Nat kappa, Nat mu)
    : lambda_(lambda), kappa_(kappa), mu_(mu) {
    if (lambda < 1 || kappa < 1 || mu < 1)
        throw std::invalid_argument("lambda, kappa and mu must be >= 1");
    std::size_t count = 1;
    const std::size_t limit = std::numeric_limits<std::size_t>::max();
    for (Index j = 0; j < lambda; ++j) {
        if (kappa != 0 && count > limit / kappa)
            throw std::overflow_error("kappa^lambda exceeds the index range");
        count *= static_cast<std::size_t>(kappa);
    }
    count_ = count;
}

std::size_t enc(const FinitePoint& x, const SpaceSig& sig) {
    if (x.size() != sig.lambda())
        throw std::invalid_argument("point length does not match lambda");
    std::size_t n = 0;
    std::size_t radix = 1;
    for (Index j = 0; j < sig.lambda(); ++j) {
        if (x[j] >= sig.kappa())
            throw std::out_of_range("coordinate >= kappa");
        n += static_cast<std::size_t>(x[j]) * radix;
        radix *= static_cast<std::size_t>(sig.kappa());
    }
    return n;
}

FinitePoint dec(std::size_t n, const SpaceSig& sig) {
    if (n >= sig.point_count()) throw std::out_of_range("index >= kappa^lambda");
    std::vector<Nat> coords(sig.lambda());
    for (Index j = 0; j < sig.lambda(); ++j) {
        coords[j] = n % sig.kappa();
        n /= sig.kappa();
    }
    return FinitePoint(std::move(coords));
}

ColoringTable::ColoringTable(SpaceSig sig, std::vector<Nat> colors)
    : sig_(sig), colors_(std::move(colors)) {
    if (colors_.size() != sig_.point_count())
        throw std::invalid_argument("colors array length must be kappa^lambda");
    for (Nat c : colors_)
        if (c >= sig_.mu()) throw std::invalid_argument("color entry >= mu");
}

Nat ColoringTable::eval(const FinitePoint& x) const {
    return colors_[enc(x, sig_)];
}

std::map<Nat, std::vector<FinitePoint>> ColoringTable::color_classes() const {
    std::map<Nat, std::vector<FinitePoint>> classes;
    for (std::size_t n = 0; n < colors_.size(); ++n)
        classes[colors_[n]].push_back(dec(n, sig_));
    return classes;
}

std::set<Nat> ColoringTable::used_colors() const {
    return {colors_.begin(), colors_.end()};
}

std::string ColoringTable::to_json() const {
    nlohmann::json doc;
    doc["lambda"] = sig_.lambda();
    doc["kappa"] = sig_.kappa();
    doc["mu"] = sig_.mu();
    doc["colors"] = colors_;
    return doc.dump();
}

ColoringTable ColoringTable::from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("lambda") || !doc.contains("kappa") ||
        !doc.contains("mu") || !doc.contains("colors"))
        throw std::invalid_argument("table document missing required fields");
    SpaceSig sig(doc.at("lambda").get<Index>(), doc.at("kappa").get<Nat>(),
                 doc.at("mu").get<Nat>());
    auto colors = doc.at("colors").get<std::vector<Nat>>();
    return ColoringTable(sig, std::move(colors));
}

void ColoringTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << to_json() << '\n';
}

ColoringTable ColoringTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

}  // namespace powcol
