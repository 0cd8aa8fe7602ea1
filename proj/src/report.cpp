#include "sgw/report.hpp"

#include <sstream>

#include "sgw/tree.hpp"

namespace sgw {

std::optional<int> resolve_gamma(const Semigroup& s, std::optional<int> requested,
                                 int detect_gamma_max) {
    if (requested) {
        if (certify(s, *requested).affirmative()) return requested;
        return std::nullopt;
    }
    const auto detected = detect_gammas(s, detect_gamma_max);
    if (detected.size() == 1) return detected.front();
    return std::nullopt;
}

nlohmann::json analyze_json(const Semigroup& s, std::optional<int> gamma,
                            int detect_gamma_max) {
    nlohmann::json j;
    j["semigroup"]["generators"] = minimal_generators(s);
    j["semigroup"]["gaps"] = s.gaps();
    j["genus"] = s.genus();
    j["frobenius"] = s.frobenius();
    j["multiplicity"] = s.multiplicity();
    j["symmetric"] = s.is_symmetric();
    j["gammas"] = detect_gammas(s, detect_gamma_max);

    const auto resolved = resolve_gamma(s, gamma, detect_gamma_max);
    const WeightReport w = weight_report(s, resolved);
    j["w_s"] = w.w_s;
    j["w_k"] = w.w_k;
    j["r"] = w.ramification;
    j["k_odd_tail"] = w.k_odd_tail;
    j["r_k"] = nullptr;
    j["bounds"] = nullptr;
    j["flags"] = nullptr;
    if (resolved) {
        j["r_k"] = *w.r_k;
        j["even_heads"] = w.even_heads;
        j["odd_members_below_2g"] = w.odd_members_below_2g;
        if (s.genus() >= 2 * *resolved + 1) {
            const BoundCheck b = check_bounds(s, *resolved);
            j["bounds"] = {{"lower_k", b.lower_k},
                           {"upper_k", b.upper_k},
                           {"lower_s", b.lower_s},
                           {"upper_s", b.upper_s}};
            j["flags"] = {{"within_k", b.within_k},
                          {"within_s", b.within_s},
                          {"attains_min_k", b.attains_min_k},
                          {"attains_max_k", b.attains_max_k}};
        }
    }
    return j;
}

std::string analyze_text(const Semigroup& s, std::optional<int> gamma,
                         int detect_gamma_max) {
    const nlohmann::json j = analyze_json(s, gamma, detect_gamma_max);
    std::ostringstream out;
    out << "semigroup   <";
    const auto gens = j["semigroup"]["generators"];
    for (size_t i = 0; i < gens.size(); ++i)
        out << (i ? "," : "") << gens[i].get<int>();
    out << ">\n";
    out << "gaps        {";
    const auto gaps = j["semigroup"]["gaps"];
    for (size_t i = 0; i < gaps.size(); ++i)
        out << (i ? "," : "") << gaps[i].get<int>();
    out << "}\n";
    out << "genus       " << j["genus"].get<int>() << "\n";
    out << "frobenius   " << j["frobenius"].get<int>() << "\n";
    out << "multiplicity " << j["multiplicity"].get<int>() << "\n";
    out << "symmetric   " << (j["symmetric"].get<bool>() ? "yes" : "no") << "\n";
    out << "gammas      [";
    for (size_t i = 0; i < j["gammas"].size(); ++i)
        out << (i ? "," : "") << j["gammas"][i].get<int>();
    out << "]\n";
    out << "W_S         " << j["w_s"].get<long long>() << "\n";
    out << "W_K         " << j["w_k"].get<long long>() << "\n";
    out << "R           " << j["r"].get<long long>() << "\n";
    out << "k odd tail  " << j["k_odd_tail"].get<int>() << "\n";
    if (!j["r_k"].is_null()) out << "R_K         " << j["r_k"].get<long long>() << "\n";
    if (!j["bounds"].is_null()) {
        out << "K bounds    [" << j["bounds"]["lower_k"].get<long long>() << ", "
            << j["bounds"]["upper_k"].get<long long>() << "]"
            << (j["flags"]["within_k"].get<bool>() ? " ok" : " VIOLATED")
            << (j["flags"]["attains_min_k"].get<bool>() ? " attains-min" : "")
            << (j["flags"]["attains_max_k"].get<bool>() ? " attains-max" : "") << "\n";
        out << "S bounds    [" << j["bounds"]["lower_s"].get<long long>() << ", "
            << j["bounds"]["upper_s"].get<long long>() << "]"
            << (j["flags"]["within_s"].get<bool>() ? " ok" : " VIOLATED") << "\n";
    }
    return out.str();
}

} // namespace sgw
