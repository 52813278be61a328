#pragma once

// JSON surface: the poset input format and the report/result serializations.
// Field order is fixed (insertion-ordered JSON) so catalogs diff cleanly.
// Exact scalars are emitted as decimal strings.

#include <json.hpp>

#include <sstream>
#include <string>

#include "lieposet/enumerate.hpp"
#include "lieposet/invariants.hpp"

namespace lieposet {

using Json = nlohmann::ordered_json;

inline Family family_from_string(const std::string& s) {
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    throw GroundSetViolation("family must be \"B\", \"C\" or \"D\", got \"" + s + "\"");
}

// Input format: {"family": "C", "n": 3, "relations": [[-2,1], ...]} with the
// relation arrays interpreted as generators.
inline SignedPoset poset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family") || !j.contains("n") || !j.contains("relations"))
        throw GroundSetViolation("poset object needs fields family, n, relations");
    Family f = family_from_string(j.at("family").get<std::string>());
    int n = j.at("n").get<int>();
    std::vector<Relation> gens;
    for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2)
            throw GroundSetViolation("each relation must be a 2-element array");
        gens.emplace_back(r.at(0).get<int>(), r.at(1).get<int>());
    }
    return SignedPoset::from_generators(f, n, gens);
}

inline SignedPoset poset_from_json_text(const std::string& text) {
    return poset_from_json(Json::parse(text));
}

inline Json poset_json(const SignedPoset& p) {
    Json j;
    j["family"] = std::string(1, family_char(p.family()));
    j["n"] = p.n();
    Json rel = Json::array();
    for (const auto& [x, y] : p.relations()) rel.push_back({x, y});
    j["relations"] = rel;
    return j;
}

inline std::string scalar_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline Json index_json(const IndexResult& r) {
    Json j;
    j["dim"] = r.dim;
    j["combinatorial"] = r.combinatorial ? Json(*r.combinatorial) : Json(nullptr);
    j["mRank"] = r.m_rank ? Json(*r.m_rank) : Json(nullptr);
    j["oracle"] = r.oracle;
    j["samples"] = r.samples;
    j["prime"] = r.prime;
    return j;
}

inline std::string verdict_string(ContactVerdict v) {
    switch (v) {
        case ContactVerdict::Contact: return "contact";
        case ContactVerdict::NotContact: return "notContact";
        default: return "notApplicable";
    }
}

inline std::string method_string(ContactCertificate::Method m) {
    switch (m) {
        case ContactCertificate::Method::ExplicitForm: return "explicitForm";
        case ContactCertificate::Method::RandomSample: return "randomSample";
        default: return "graphCriterion";
    }
}

inline Json certificate_json(const ContactCertificate& c) {
    Json j;
    j["verdict"] = verdict_string(c.verdict);
    if (c.form) {
        Json form;
        for (const auto& [e, v] : c.form->assignment) form[e.name()] = scalar_string(v);
        j["form"] = form;
    } else {
        j["form"] = nullptr;
    }
    j["determinant"] = c.determinant ? Json(scalar_string(*c.determinant)) : Json(nullptr);
    j["method"] = method_string(c.method);
    return j;
}

inline Json report_json(const ClassificationReport& r) {
    Json j;
    j["family"] = std::string(1, family_char(r.family));
    j["n"] = r.n;
    Json rel = Json::array();
    for (const auto& [x, y] : r.relations) rel.push_back({x, y});
    j["relations"] = rel;
    j["dim"] = r.dim;
    j["index"] = r.index.oracle;
    j["eta"] = r.eta ? Json(*r.eta) : Json(nullptr);
    j["frobenius"] = r.frobenius;
    if (r.contact) {
        j["contact"] = r.contact->verdict == ContactVerdict::Contact;
        j["method"] = method_string(r.contact->method);
        j["determinant"] =
            r.contact->determinant ? Json(scalar_string(*r.contact->determinant)) : Json(nullptr);
    } else {
        j["contact"] = nullptr;
        j["method"] = nullptr;
        j["determinant"] = nullptr;
    }
    j["seed"] = r.options.seed;
    j["samples"] = r.options.samples;
    j["prime"] = r.options.prime;
    return j;
}

inline Json summary_json(const VerificationSummary& s, bool includeWallTime) {
    Json j;
    j["family"] = std::string(1, family_char(s.family));
    j["n"] = s.n;
    j["candidates"] = s.candidate_count;
    j["valid"] = s.valid_count;
    j["checksRun"] = s.checks_run;
    j["failures"] = s.failures;
    if (includeWallTime) j["wallTime"] = s.wall_time_seconds;
    return j;
}

}  // namespace lieposet
