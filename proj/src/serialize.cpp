#include "meandiv/serialize.hpp"

#include <sstream>

namespace meandiv {

namespace {

nlohmann::ordered_json params_json(const Params& params) {
  return nlohmann::ordered_json(params.m_list);
}

}  // namespace

nlohmann::ordered_json ck_report_json(const CkReport& report) {
  nlohmann::ordered_json j;
  j["params"] = params_json(report.params);
  j["k"] = report.k;
  j["M"] = report.bound.M;
  j["per_kprime"] = nlohmann::ordered_json::array();
  for (const auto& d : report.bound.details) {
    j["per_kprime"].push_back(
        {{"kprime", d.kprime}, {"D", rat_str(d.D)}, {"E", d.E}});
  }
  j["mu"] = nlohmann::ordered_json::object();
  for (const auto& [p, mu] : report.mu) {
    j["mu"][std::to_string(p)] = mu;
  }
  j["C"] = report.C.str();
  return j;
}

nlohmann::ordered_json witness_report_json(const WitnessReport& report) {
  nlohmann::ordered_json j;
  j["params"] = params_json(report.params);
  j["k"] = report.k;
  j["kL"] = report.kL;
  j["residue"] = report.residue;
  j["prime"] = report.prime;
  j["t"] = report.t;
  j["valuation"] = report.valuation;
  j["discrete_value"] = report.discrete_value;
  return j;
}

nlohmann::ordered_json classify_json(const Params& params) {
  nlohmann::ordered_json j;
  j["params"] = params_json(params);
  j["gcd"] = params.g;
  j["theorem_main_applies"] = (params.g == 1);
  j["mean_condition"] = mean_divisibility_condition(params);
  j["main2_applies"] = (params.g > 1);
  return j;
}

std::string scan_csv(const DenominatorScan& scan) {
  std::ostringstream out;
  out << "t,den\n";
  for (const auto& [t, den] : scan.rows) {
    out << t << ',' << den.str() << '\n';
  }
  return out.str();
}

nlohmann::ordered_json scan_json(const Params& params, std::int64_t k,
                                 const DenominatorScan& scan) {
  nlohmann::ordered_json j;
  j["params"] = params_json(params);
  j["k"] = k;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [t, den] : scan.rows) {
    j["rows"].push_back({{"t", t}, {"den", den.str()}});
  }
  return j;
}

std::string integral_plot_csv(const std::vector<std::pair<Rat, Rat>>& points) {
  std::ostringstream out;
  out << "u,I,u_decimal,I_decimal\n";
  for (const auto& [u, value] : points) {
    out << rat_str(u) << ',' << rat_str(value) << ',' << rat_approx(u) << ','
        << rat_approx(value) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json integral_plot_json(
    const Params& params, std::int64_t k,
    const std::vector<std::pair<Rat, Rat>>& points) {
  nlohmann::ordered_json j;
  j["params"] = params_json(params);
  j["k"] = k;
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& [u, value] : points) {
    j["points"].push_back({{"u", rat_str(u)},
                           {"I", rat_str(value)},
                           {"u_decimal", rat_approx(u)},
                           {"I_decimal", rat_approx(value)}});
  }
  return j;
}

}  // namespace meandiv
