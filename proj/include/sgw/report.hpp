#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sgw/gamma.hpp"
#include "sgw/semigroup.hpp"
#include "sgw/weights.hpp"

namespace sgw {

// Single-semigroup report. Keys: semigroup {generators, gaps}, genus,
// frobenius, multiplicity, symmetric, gammas, w_s, w_k, r, r_k, k_odd_tail,
// bounds {lower_k, upper_k, lower_s, upper_s}, flags {within_k, within_s,
// attains_min_k, attains_max_k}. r_k and bounds are null unless a certified
// gamma was resolved.
nlohmann::json analyze_json(const Semigroup& s, std::optional<int> gamma,
                            int detect_gamma_max = 8);

std::string analyze_text(const Semigroup& s, std::optional<int> gamma,
                         int detect_gamma_max = 8);

// Resolution rule shared by the CLI: an explicit gamma wins when certified;
// otherwise the sole detected gamma, if any.
std::optional<int> resolve_gamma(const Semigroup& s, std::optional<int> requested,
                                 int detect_gamma_max = 8);

} // namespace sgw
