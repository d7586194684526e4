#include "steinitz/json_io.hpp"

namespace steinitz {

namespace {
nlohmann::json elem_json(const ClassElem& e) { return e.e; }

nlohmann::json alpha_json(const FieldElem& a) {
    if (!a.is_integral())
        return nlohmann::json{{"a", to_string(a.a)}, {"b", to_string(a.b)}};
    return nlohmann::json::array({a.a.num, a.b.num});
}
}  // namespace

nlohmann::json to_json(const Subgroup& s) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : s.generators()) gens.push_back(elem_json(g));
    return {{"order", s.order()}, {"generators", gens}};
}

nlohmann::json to_json(const ClassGroup& cg) {
    nlohmann::json forms = nlohmann::json::array();
    for (const auto& f : cg.forms()) forms.push_back({f.a, f.b, f.c});
    return {{"d", cg.field().d},
            {"disc", cg.field().disc},
            {"h", cg.h()},
            {"invariant_factors", cg.group().factors},
            {"forms", forms}};
}

nlohmann::json to_json(const NormCondition& cond, const WGroupResult& res) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& w : res.primes_used)
        witnesses.push_back({{"p", w.prime.p},
                             {"r", w.prime.r},
                             {"norm", w.prime.norm()},
                             {"residue", w.residue},
                             {"class", elem_json(w.cls)}});
    return {{"modulus", cond.modulus},
            {"residues", cond.allowed()},
            {"plus_minus", cond.plus_minus},
            {"stabilized", res.stabilized},
            {"short_circuited", res.short_circuited},
            {"window", res.window},
            {"max_norm_reached", res.max_norm_reached},
            {"subgroup", to_json(res.subgroup)},
            {"witnesses", witnesses}};
}

nlohmann::json to_json(const RealizableInterval& iv) {
    nlohmann::json trail = nlohmann::json::array();
    for (const auto& t : iv.trail) trail.push_back({{"rule", t.rule}, {"detail", t.detail}});
    nlohmann::json j{{"exact", iv.exact},
                     {"lower", to_json(iv.lower)},
                     {"upper", to_json(iv.upper)},
                     {"trail", trail}};
    if (iv.variant_note) j["variant_note"] = *iv.variant_note;
    return j;
}

nlohmann::json to_json(const QuadField&, const EnumerationReport& rep) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : rep.samples)
        samples.push_back({{"alpha", alpha_json(s.alpha)},
                           {"disc_norm", s.disc_norm},
                           {"class", elem_json(s.steinitz)}});
    nlohmann::json realized = nlohmann::json::array();
    for (const auto& g : rep.realized.generators()) realized.push_back(elem_json(g));
    return {{"field_d", rep.field_d},
            {"bound", rep.bound},
            {"samples", samples},
            {"realized", realized}};
}

nlohmann::json to_json(const QuadField&, const BiquadReport& rep) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& s : rep.samples)
        pairs.push_back({{"alpha1", alpha_json(s.alpha1)},
                         {"alpha2", alpha_json(s.alpha2)},
                         {"class", elem_json(s.steinitz)}});
    nlohmann::json realized = nlohmann::json::array();
    for (const auto& g : rep.realized.generators()) realized.push_back(elem_json(g));
    return {{"field_d", rep.field_d},
            {"bound", rep.bound},
            {"pairs", pairs},
            {"realized", realized}};
}

nlohmann::json to_json(const VerificationOutcome& out) {
    return {{"upper_contains_realized", out.upper_contains_realized},
            {"lower_attained", out.lower_attained},
            {"analytic_violations", out.analytic_violations},
            {"note", out.note}};
}

std::string render_text(const nlohmann::json& j, int indent) {
    std::string pad(size_t(indent) * 2, ' ');
    std::string out;
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_structured() && !it.value().empty()) {
                out += pad + it.key() + ":\n" + render_text(it.value(), indent + 1);
            } else {
                out += pad + it.key() + ": " + it.value().dump() + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured() && !v.empty()) {
                out += pad + "-\n" + render_text(v, indent + 1);
            } else {
                out += pad + "- " + v.dump() + "\n";
            }
        }
    } else {
        out += pad + j.dump() + "\n";
    }
    return out;
}

}  // namespace steinitz
