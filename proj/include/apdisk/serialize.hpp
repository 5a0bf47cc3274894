#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "apdisk/boundary_smoothness.hpp"
#include "apdisk/conformal.hpp"
#include "apdisk/seminorms.hpp"
#include "apdisk/types.hpp"

namespace apdisk {

using nlohmann::json;

// { "coeffs": [[re, im], ...], "assumed_radius": number }
json series_to_json(const PowerSeries& f);
PowerSeries series_from_json(const json& j);

// { "arc": [a, b], "samples": [[re, im], ...],
//   "endpoint_derivatives": { "a": [...], "b": [...] } }
json arc_to_json(const ArcTrace& u);
ArcTrace arc_from_json(const json& j);

json sweep_to_json(const ConvergenceReport& rep);
json classification_to_json(const ApClassification& cls);
json arc_decay_to_json(const ArcDecayReport& rep);
json arc_convergence_to_json(const ArcConvergenceReport& rep);
json equivalence_to_json(const EquivalenceReport& rep);

/// Integer coefficient arrays with an i-power tag where the whole polynomial
/// lies in i^m * Z[x]; mixed polynomials fall back to [re, im] pairs.
json chain_system_to_json(const ChainRuleSystem& sys);

json chart_certificate_to_json(const JordanChart& chart);

/// CSV emitters; every file starts with a header row.
void sweep_to_csv(const ConvergenceReport& rep, std::ostream& os);          // order,radius,sup_error
void seminorms_to_csv(const std::vector<double>& norms, std::ostream& os);  // order,seminorm
void chart_to_csv(const JordanChart& chart, std::ostream& os);  // t,re_gamma,im_gamma,re_dgamma,im_dgamma

}  // namespace apdisk
