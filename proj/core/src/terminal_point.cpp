#include "mmp/terminal_point.hpp"

#include <algorithm>

namespace mmp {

GermSeries::GermSeries(const std::vector<Term>& terms) {
    for (const Term& t : terms) {
        if (t.k < 0) throw ValidationError("germ term with negative exponent");
        if (t.val < 0) throw ValidationError("germ term with negative valuation");
        if (!terms_.emplace(t.k, t.val).second)
            throw ValidationError("duplicate germ term for k = " + std::to_string(t.k));
    }
}

std::optional<long> GermSeries::valuation_of(long k) const {
    auto it = terms_.find(k);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
}

std::optional<long> GermSeries::h_of_special_part() const {
    for (const auto& [k, val] : terms_)
        if (k >= 1 && val == 0) return k;
    return std::nullopt;
}

std::string GermSeries::str() const {
    std::string s = "[";
    bool first = true;
    for (const auto& [k, val] : terms_) {
        if (!first) s += ",";
        first = false;
        s += "(" + std::to_string(k) + "," + std::to_string(val) + ")";
    }
    return s + "]";
}

std::string TerminalPoint::str() const {
    return "r=" + r.str() + " a=" + a.str() + " g=" + g.str();
}

TerminalPoint make_terminal_point(const Int& r, const Int& a, GermSeries g) {
    if (r < 2) throw ValidationError("terminal point requires index r >= 2");
    if (a <= 0 || a >= r) throw ValidationError("terminal point requires 0 < a < r");
    if (gcd(r, a) != 1) throw ValidationError("gcd(r,a) must be 1");
    // Generic-fiber smoothness proxy: a unit term somewhere, or a constant
    // term of finite positive valuation.
    bool has_unit = std::any_of(g.terms().begin(), g.terms().end(),
                                [](const auto& kv) { return kv.second == 0; });
    if (!has_unit && !g.has_constant_term())
        throw ValidationError("germ with neither a unit term nor a constant term is ill-posed");
    return TerminalPoint{r, a, std::move(g)};
}

Index1Point classify_index1(const std::string& label) {
    if (label == "xyz+tau") return {Index1Point::Variant::XyzTau, std::nullopt};
    if (label == "xy+tau") return {Index1Point::Variant::XyTau, std::nullopt};
    if (label.size() >= 2 && (label[0] == 'A' || label[0] == 'D' || label[0] == 'E')) {
        long idx = 0;
        for (std::size_t i = 1; i < label.size(); ++i) {
            if (label[i] < '0' || label[i] > '9')
                throw ValidationError("unknown index-1 germ label: " + label);
            idx = idx * 10 + (label[i] - '0');
        }
        const char s = label[0];
        const bool ok = (s == 'A' && idx >= 1) || (s == 'D' && idx >= 4) ||
                        (s == 'E' && idx >= 6 && idx <= 8);
        if (!ok) throw ValidationError("not a rational double point label: " + label);
        return {Index1Point::Variant::Rdp, AdeLabel{s, idx}};
    }
    throw ValidationError("unknown index-1 germ label: " + label);
}

std::string Index1Point::str() const {
    switch (variant) {
        case Variant::XyzTau: return "xyz+tau";
        case Variant::XyTau: return "xy+tau";
        case Variant::Rdp: return "rdp(" + rdp_kind->str() + ")";
    }
    return "?";
}

Int index(const TerminalPoint& p) { return p.r; }
Int index(const Index1Point&) { return 1; }

Int axial_multiplicity(const TerminalPoint& p) {
    auto v0 = p.g.valuation_of(0);
    if (!v0)
        throw ValidationError("axial multiplicity is infinite: germ has no constant term");
    return Int(*v0);
}

SimpleType simple_type(const TerminalPoint& p) {
    auto h = p.g.h_of_special_part();
    return {!h.has_value() || *h == 1, h};
}

Rat blowup_discrepancy(const std::vector<Rat>& weights, const Rat& f_weight) {
    Rat sum(0);
    for (const Rat& w : weights) {
        if (w.sign() <= 0) throw ValidationError("blowup weights must be positive");
        sum += w;
    }
    Rat disc = sum - f_weight - Rat(1);
    if (disc.sign() <= 0)
        throw ValidationError("nonpositive discrepancy " + disc.str() +
                              ": input is not terminal");
    return disc;
}

BlowupResult standard_blowup(const TerminalPoint& p) {
    auto [is_simple, h] = simple_type(p);
    if (!is_simple)
        throw ValidationError("standard blowup requires a simple-type point (h = " +
                              std::to_string(*h) + ")");
    Int n = axial_multiplicity(p);  // rejects germs without constant term
    if (n < 1)
        throw ValidationError("standard blowup requires a singular point "
                              "(axial multiplicity >= 1)");

    // Weights (1/r)(a, r-a, 1, r) on (x, y, z, tau); the weight of
    // F = xy + G is min(w(xy), w(G)) = min(1, min_k(val_k + k)) = 1 here.
    Rat f_weight(1);
    for (const auto& [k, val] : p.g.terms())
        f_weight = std::min(f_weight, Rat(Int(val) + Int(k)));
    std::vector<Rat> weights = {Rat(p.a, p.r), Rat(p.r - p.a, p.r), Rat(1, p.r), Rat(1)};
    Rat disc = blowup_discrepancy(weights, f_weight);

    BlowupResult out{disc, {}};
    if (p.a > 1) out.children.push_back({BlowupChild::Chart::X, p.a, std::nullopt});
    if (p.r - p.a > 1) out.children.push_back({BlowupChild::Chart::Y, p.r - p.a, std::nullopt});
    if (n > 1) out.children.push_back({BlowupChild::Chart::Z, p.r, Int(n - 1)});
    return out;
}

std::string BlowupChild::str() const {
    std::string c = chart == Chart::X ? "x" : (chart == Chart::Y ? "y" : "z");
    std::string s = "chart=" + c + " index=" + child_index.str();
    if (axial) s += " axial=" + axial->str();
    return s;
}

CyclicQuotientType surface_germ_types(const TerminalPoint& p, bool on_double_curve) {
    Int b = mod_inverse(p.a, p.r);
    if (on_double_curve) return make_quotient(p.r, b);
    auto h = p.g.h_of_special_part();
    if (!h)
        throw ValidationError(
            "G_s = 0: the special fiber is not integral through this point "
            "(germ xy + tau); no off-curve surface germ exists");
    Int hh(*h);
    return make_quotient(hh * p.r * p.r, b * hh * p.r - 1);
}

}  // namespace mmp
