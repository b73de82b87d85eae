#include "wienerlab/serialize.hpp"

namespace wienerlab {

nlohmann::json int_to_json(Int value) {
    if (is_json_safe(value)) return static_cast<std::int64_t>(value);
    return to_string(value);
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Int{j.get<std::uint64_t>()} : Int{j.get<std::int64_t>()};
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw ParseError("expected an integer or a decimal string, got " + j.dump());
}

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (Int c : p.coeffs()) coeffs.push_back(int_to_json(c));
    if (coeffs.empty()) coeffs.push_back(0);
    return {{"coeffs", coeffs}};
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw ParseError("polynomial JSON needs a \"coeffs\" array");
    }
    std::vector<Int> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(int_from_json(c));
    return Poly(std::move(coeffs));
}

nlohmann::json verdict_to_json(const SequenceVerdict& v) {
    nlohmann::json out{{"unimodal", v.unimodal}, {"nondecreasing", v.nondecreasing}, {"log_concave", v.log_concave}};
    out["peak"] = v.peak ? nlohmann::json::array({v.peak->first, v.peak->second}) : nlohmann::json(nullptr);
    out["first_violation"] = v.first_violation ? nlohmann::json(*v.first_violation) : nlohmann::json(nullptr);
    if (v.neg_rational_roots) {
        nlohmann::json roots = nlohmann::json::array();
        for (const Rational& r : *v.neg_rational_roots) roots.push_back(to_string(r));
        out["neg_rational_roots"] = roots;
    } else {
        out["neg_rational_roots"] = nullptr;
    }
    return out;
}

nlohmann::json report_to_json(const WienerReport& report) {
    nlohmann::json out;
    out["schema"] = kSchema;
    out["coeffs"] = poly_to_json(report.wiener_poly)["coeffs"];
    out["index"] = int_to_json(report.wiener_index);
    out["diameter"] = report.diameter;
    out["ordered"] = poly_to_json(report.ordered_poly);
    nlohmann::json checks = nlohmann::json::object();
    const auto flags = as_array(report.checks);
    for (std::size_t i = 0; i < flags.size(); ++i) checks[std::string(kPropertyNames[i])] = flags[i];
    out["checks"] = checks;
    return out;
}

}  // namespace wienerlab
