#pragma once

/**
 * @file json_io.hpp
 * @brief Canonical JSON forms for the CLI. All rationals are serialized as
 *        strings to keep the output exact; orderings are the canonical ones,
 *        so output is byte-deterministic for a given input.
 */

#include <uqso/branch.hpp>
#include <uqso/ladder.hpp>
#include <uqso/pbw.hpp>
#include <uqso/reps.hpp>
#include <uqso/scalar.hpp>
#include <uqso/weights.hpp>

#include <json.hpp>

#include <string>

namespace uqso {

using nlohmann::json;

inline json to_json(const Rational& r) { return r.get_str(); }

inline json to_json(const Scalar& s) {
    return json{{"re", s.re().get_str()}, {"im", s.im().get_str()}};
}

inline json to_json(const HalfInt& h) { return h.str(); }

inline json to_json(const EigenLabel& lab) {
    json j;
    j["type"] = lab.kind == EigenLabel::Kind::Classical ? "classical" : "nonclassical";
    j["m"] = lab.m.str();
    if (lab.kind == EigenLabel::Kind::Nonclassical) j["sign"] = lab.sign;
    return j;
}

inline json to_json(const Weight& w) {
    json arr = json::array();
    for (const auto& lab : w.labels) arr.push_back(to_json(lab));
    return arr;
}

inline json to_json(const AlgebraElement& x) {
    json arr = json::array();
    for (const auto& [mono, coeff] : x.terms()) {
        json m = json::array();
        for (const auto& [g, e] : mono.factors) m.push_back(json::array({g.k, g.l, e}));
        arr.push_back(json{{"monomial", m},
                           {"coeff", json{{"re", coeff.re().get_str()},
                                          {"im", coeff.im().get_str()}}}});
    }
    return arr;
}

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const Representation& rep) {
    json j;
    j["n"] = rep.n();
    j["family"] = family_name(rep.family().kind);
    j["params"] = rep.family().describe();
    j["dim"] = rep.dim();
    j["basis"] = rep.basis_labels();
    json mats;
    for (int g = 2; g <= rep.n(); ++g)
        mats["I" + std::to_string(g) + std::to_string(g - 1)] = to_json(rep.chain_image(g));
    j["matrices"] = mats;
    return j;
}

inline json to_json(const WeightDiagram& dg) {
    json arr = json::array();
    for (const auto& [w, e] : dg.entries)
        arr.push_back(json{{"weight", to_json(w)}, {"multiplicity", e.multiplicity}});
    return json{{"n", dg.n}, {"dim", dg.dim}, {"weights", arr}};
}

inline json to_json(const RelationReport& rpt) {
    json checks = json::array();
    for (const auto& c : rpt.checks) {
        json jc{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.pass) jc["witness"] = c.witness;
        checks.push_back(jc);
    }
    return json{{"checks", checks},
                {"summary", rpt.all_pass ? "all-pass" : "failures-present"}};
}

inline json to_json(const LadderReport& rpt) {
    json checks = json::array();
    for (const auto& c : rpt.checks) {
        json jc{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}};
        if (!c.weight.labels.empty()) jc["weight"] = to_json(c.weight);
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    return json{{"checks", checks},
                {"summary", rpt.all_pass ? "all-pass" : "failures-present"}};
}

inline json to_json(const ShiftReport& rpt) {
    json j;
    j["source"] = to_json(rpt.source);
    j["target"] = to_json(rpt.target);
    j["target_in_diagram"] = rpt.target_in_diagram;
    j["contained"] = rpt.contained;
    return j;
}

inline json to_json(const ClassLabel& lab) {
    json j;
    if (std::holds_alternative<ClassicalLabel>(lab)) {
        const auto& cl = std::get<ClassicalLabel>(lab);
        j["type"] = "classical";
        json m = json::array();
        for (const auto& h : cl.m) m.push_back(h.str());
        j["m"] = m;
    } else {
        const auto& nc = std::get<NonclassicalLabel>(lab);
        j["type"] = "nonclassical";
        json m = json::array();
        for (const auto& h : nc.m) m.push_back(h.str());
        j["m"] = m;
        j["g"] = nc.g.eps;
    }
    return j;
}

inline json to_json(const Signature& sig) {
    json traces = json::array();
    for (const auto& t : sig.traces) traces.push_back(to_json(t));
    json spectra = json::array();
    for (const auto& sp : sig.spectra) {
        json s = json::array();
        for (const auto& lambda : sp) s.push_back(to_json(lambda));
        spectra.push_back(s);
    }
    return json{{"dim", sig.dim},
                {"type", rep_type_name(sig.type)},
                {"highest_weight", to_json(sig.highest_weight)},
                {"traces", traces},
                {"spectra", spectra}};
}

inline json to_json(const BranchingResult& br) {
    json comps = json::array();
    for (const auto& c : br.components)
        comps.push_back(json{{"label", to_json(c.label)},
                             {"dim", c.dim},
                             {"multiplicity", c.multiplicity}});
    return json{{"parent", br.parent},
                {"parent_type", rep_type_name(br.parent_type)},
                {"parent_dim", br.parent_dim},
                {"component_count", br.component_count},
                {"components", comps}};
}

}  // namespace uqso
