#include "ospchar/json_io.hpp"

namespace ospchar {

nlohmann::json to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

nlohmann::json to_json(const MonomialExpansion& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [exp, coef] : e.terms())
        terms.push_back({{"exp", exp}, {"coef", coef.str()}});
    return {{"m", e.num_x()}, {"n", e.num_y()}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const ShiftedCharacter& c) {
    nlohmann::json j = to_json(c.expansion);
    j["shift2"] = c.shift2;
    return j;
}

nlohmann::json to_json(const CharacterSum& cs) {
    nlohmann::json labels = nlohmann::json::array();
    for (const Partition& lam : cs.labels) labels.push_back(to_json(lam));
    nlohmann::json j;
    j["family"] = family_name(cs.family);
    j["params"] = cs.params;
    j["shift2"] = cs.prefactor2;
    j["cutoff"] = cs.cutoff ? nlohmann::json(*cs.cutoff) : nlohmann::json(nullptr);
    j["labels"] = std::move(labels);
    return j;
}

nlohmann::json to_json(const TruncatedSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Integer& c : s.coeffs) coeffs.push_back(c.str());
    return {{"cutoff", s.degree()}, {"coeffs", std::move(coeffs)}};
}

nlohmann::json to_json(const VerificationReport& report, bool include_ms) {
    nlohmann::json j;
    j["identity"] = report.identity;
    j["params"] = report.params;
    j["status"] = status_name(report.status);
    if (!report.witness.is_null()) j["witness"] = report.witness;
    if (include_ms) j["ms"] = report.ms;
    return j;
}

} // namespace ospchar
