#pragma once

// JSON encodings of the library's results. Big integers are decimal strings.

#include <string>

#include <nlohmann/json.hpp>

#include "equivalence.hpp"
#include "invariants.hpp"
#include "number_field.hpp"
#include "padic_form.hpp"
#include "splitting.hpp"
#include "trace_form.hpp"

namespace ramify {

using json = nlohmann::ordered_json;

inline json to_json(const IntPoly& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(c.get_str());
    return a;
}

inline json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
        rows.push_back(r);
    }
    return rows;
}

inline json to_json(const NumberField& L) {
    json j;
    j["min_poly"] = to_json(L.min_poly());
    j["degree"] = L.degree();
    j["disc"] = L.disc().get_str();
    j["poly_disc"] = L.poly_disc().get_str();
    j["index"] = L.index().get_str();
    j["signature"] = {L.signature().real, L.signature().complex};
    j["basis_num"] = to_json(L.basis_num());
    j["basis_den"] = L.basis_den().get_str();
    if (L.irreducibility_unresolved()) j["warning"] = "irreducibility unresolved";
    return j;
}

inline json to_json(const SplittingType& s) {
    json j;
    j["p"] = s.p.value();
    json pairs = json::array();
    for (auto [e, f] : s.pairs) pairs.push_back({e, f});
    j["pairs"] = pairs;
    if (s.unresolved_field) j["warning"] = "irreducibility unresolved";
    return j;
}

inline json to_json(const RamificationFlags& f) {
    return json{{"unramified", f.unramified}, {"totally_split", f.totally_split}, {"wild", f.wild}};
}

inline json to_json(const RamificationInvariants& r) {
    json j;
    j["p"] = r.p.value();
    j["u"] = u(r.p).get_str();
    j["alpha"] = r.alpha.get_str();
    j["beta"] = r.beta.get_str();
    j["nu"] = r.nu ? (*r.nu == 1 ? "1" : "u") : "undefined";
    j["flags"] = to_json(r.flags);
    j["pairs"] = to_json(r.splitting)["pairs"];
    return j;
}

inline json to_json(const AForm& a) {
    json j;
    j["p"] = a.p.value();
    json blocks = json::array();
    for (const auto& b : a.blocks) {
        json blk = json::array();
        for (const auto& x : b) blk.push_back(x.get_str());
        blocks.push_back(blk);
    }
    j["blocks"] = blocks;
    j["det"] = a.det().get_str();
    j["form"] = a.str();
    return j;
}

inline json match_json(const std::optional<bool>& m) { return m ? json(*m) : json(nullptr); }

inline json to_json(const TraceVerdict& v) {
    json j;
    j["p"] = v.p.value();
    j["predicted"] = v.predicted.str();
    j["oracle"] = v.oracle.str();
    j["match"] = match_json(v.match);
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

inline json to_json(const AlphaFingerprint& fp) {
    json j;
    j["bound"] = fp.bound;
    json alphas = json::object();
    for (const auto& [p, a] : fp.alpha) alphas[std::to_string(p)] = a.get_str();
    j["alpha"] = alphas;
    return j;
}

inline json to_json(const ComparisonReport& r) {
    json j;
    j["bound"] = r.bound;
    j["degrees"] = {r.degree_k, r.degree_l};
    json diffs = json::array();
    for (const auto& d : r.differs)
        diffs.push_back({{"p", d.p}, {"alpha_K", d.alpha_k.get_str()}, {"alpha_L", d.alpha_l.get_str()}, {"ramified", d.ramified}});
    j["differs"] = diffs;
    j["verdict"] = r.verdict;
    return j;
}

// One "key: value" line per top-level member; strings unquoted, everything else compact JSON.
inline std::string to_text(const json& j) {
    std::string out;
    for (const auto& [k, v] : j.items()) out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return out;
}

}  // namespace ramify
