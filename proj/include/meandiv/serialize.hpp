#pragma once

#include <string>

#include <json.hpp>

#include "meandiv/ck.hpp"
#include "meandiv/oracle.hpp"
#include "meandiv/witness.hpp"

namespace meandiv {

/// {"params":[...], "k":.., "M":.., "per_kprime":[{"kprime","D","E"}],
///  "mu":{"p":mu}, "C":"decimal"} with D as "num/den" and C as a decimal
/// string.
nlohmann::ordered_json ck_report_json(const CkReport& report);

/// {"params","k","kL","residue","prime","t","valuation","discrete_value"}
nlohmann::ordered_json witness_report_json(const WitnessReport& report);

/// {"params","gcd","theorem_main_applies","mean_condition","main2_applies"}
nlohmann::ordered_json classify_json(const Params& params);

/// CSV "t,den" with LF line endings; dens as decimal strings.
std::string scan_csv(const DenominatorScan& scan);

nlohmann::ordered_json scan_json(const Params& params, std::int64_t k,
                                 const DenominatorScan& scan);

/// CSV "u,I,u_decimal,I_decimal" rows over the plot points; exact values
/// as "num/den", decimals as convenience approximations.
std::string integral_plot_csv(const std::vector<std::pair<Rat, Rat>>& points);

nlohmann::ordered_json integral_plot_json(
    const Params& params, std::int64_t k,
    const std::vector<std::pair<Rat, Rat>>& points);

}  // namespace meandiv
