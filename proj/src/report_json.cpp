#include <json.hpp>

#include "partstat/qseries.hpp"
#include "partstat/transforms.hpp"

namespace partstat {

namespace {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& p) {
    json obj = json::object();
    for (const auto& [e, v] : p.terms()) {
        obj[std::to_string(e)] = v.to_string();
    }
    return obj;
}

template <typename R>
json series_skeleton(const TruncatedSeries<R>& s, const char* ring) {
    json j;
    j["order"] = s.order;
    j["ring"] = ring;
    j["coeffs"] = json::array();
    return j;
}

}  // namespace

std::string series_to_json(const TruncatedSeries<Int>& s) {
    json j = series_skeleton(s, "integer");
    for (long i = 0; i < s.order; ++i) j["coeffs"].push_back(s[i].to_string());
    return j.dump();
}

std::string series_to_json(const TruncatedSeries<Rat>& s) {
    json j = series_skeleton(s, "rational");
    for (long i = 0; i < s.order; ++i) j["coeffs"].push_back(s[i].to_string());
    return j.dump();
}

std::string series_to_json(const TruncatedSeries<LaurentPoly>& s) {
    json j = series_skeleton(s, "laurent");
    for (long i = 0; i < s.order; ++i) j["coeffs"].push_back(laurent_to_json(s[i]));
    return j.dump();
}

std::string residual_report_to_json(const ResidualReport& r) {
    json j;
    j["law"] = r.law;
    j["inputs"] = r.inputs;
    j["lhs"] = {{"re", r.lhs.re.to_string(30)}, {"im", r.lhs.im.to_string(30)}};
    j["rhs"] = {{"re", r.rhs.re.to_string(30)}, {"im", r.rhs.im.to_string(30)}};
    j["residual"] = r.residual.to_string(20);
    j["scale"] = r.scale.to_string(20);
    j["pass"] = r.pass;
    return j.dump();
}

}  // namespace partstat
