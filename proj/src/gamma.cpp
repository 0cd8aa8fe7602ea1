#include "sgw/gamma.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "sgw/weights.hpp"

namespace sgw {

GammaCertificate certify(const Semigroup& s, int gamma) {
    if (gamma < 0) fail(errc::invalid_argument, "certify: gamma must be >= 0");
    GammaCertificate cert;
    cert.gamma = gamma;
    for (int x = 2; x <= 4 * gamma; x += 2)
        if (s.contains(x)) cert.even_elements_in_window.push_back(x);
    cert.even_count_ok = static_cast<int>(cert.even_elements_in_window.size()) == gamma;
    cert.pivot_element = s.nth_member(gamma + 1);
    cert.pivot_ok = cert.pivot_element == 4 * gamma + 2;
    return cert;
}

std::vector<int> detect_gammas(const Semigroup& s, int gamma_max) {
    if (gamma_max < 0) fail(errc::invalid_argument, "detect_gammas: gamma_max must be >= 0");
    std::vector<int> out;
    for (int gamma = 0; gamma <= gamma_max; ++gamma)
        if (certify(s, gamma).affirmative()) out.push_back(gamma);
    return out;
}

namespace {

[[noreturn]] void out_of_range(const char* which, int gamma, int g, const std::string& why) {
    fail(errc::construction_out_of_range,
         std::string(which) + "(" + std::to_string(gamma) + ", " + std::to_string(g) +
             "): " + why);
}

} // namespace

Semigroup make_maximizer(int gamma, int g) {
    if (gamma < 0 || g < 2 * gamma + 1)
        out_of_range("make_maximizer", gamma, g, "requires g >= 2*gamma+1");
    const int odd_gen = 2 * g - 4 * gamma + 1;
    const Semigroup s = Semigroup::from_generators({4, 4 * gamma + 2, odd_gen});
    if (s.genus() != g)
        out_of_range("make_maximizer", gamma, g,
                     "construction has genus " + std::to_string(s.genus()));
    if (!certify(s, gamma).affirmative())
        out_of_range("make_maximizer", gamma, g, "certificate fails");
    return s;
}

Semigroup make_minimizer(int gamma, int g) {
    if (gamma < 0 || g < 3 * gamma + 1)
        out_of_range("make_minimizer", gamma, g, "requires g >= 3*gamma+1");
    std::vector<int> gaps;
    std::vector<int> odd, even;
    for (int x = 1; x <= 2 * (g - gamma) - 1; x += 2) odd.push_back(x);
    for (int x = 2; x <= 2 * gamma; x += 2) even.push_back(x);
    std::merge(odd.begin(), odd.end(), even.begin(), even.end(), std::back_inserter(gaps));
    const Semigroup s = Semigroup::from_gaps(gaps);
    if (s.genus() != g || !certify(s, gamma).affirmative())
        out_of_range("make_minimizer", gamma, g, "post-check failed");
    return s;
}

Semigroup make_prop2_member(int gamma, int g, int k) {
    if (gamma < 1)
        fail(errc::invalid_argument, "make_prop2_member: gamma must be >= 1");
    if (k < 1 || k > gamma + 1)
        fail(errc::invalid_argument, "make_prop2_member: k must lie in 1..gamma+1");
    const int g3 = 2 * g - 2 * gamma - 2 * k + 3;
    const int g4 = 2 * g - 2 * gamma + 2 * k + 1;
    if (g < 3 * gamma || g3 < 1)
        out_of_range("make_prop2_member", gamma, g, "requires g >= 3*gamma");
    const Semigroup s = Semigroup::from_generators({4, 4 * gamma + 2, g3, g4});
    if (s.genus() != g)
        out_of_range("make_prop2_member", gamma, g,
                     "construction has genus " + std::to_string(s.genus()));
    if (s.frobenius() != 2 * g - 2 * gamma + 2 * k - 3)
        out_of_range("make_prop2_member", gamma, g,
                     "frobenius " + std::to_string(s.frobenius()) + " off the closed form");
    if (s.multiplicity() != 4)
        out_of_range("make_prop2_member", gamma, g, "multiplicity is not 4");
    if (!certify(s, gamma).affirmative())
        out_of_range("make_prop2_member", gamma, g, "certificate fails");
    return s;
}

BoundCheck check_bounds(const Semigroup& s, int gamma) {
    const int g = s.genus();
    if (!certify(s, gamma).affirmative() || g < 2 * gamma + 1)
        fail(errc::not_gamma_hyperelliptic,
             "check_bounds: input is not " + std::to_string(gamma) +
                 "-hyperelliptic of genus >= " + std::to_string(2 * gamma + 1));
    BoundCheck b;
    const long long base = binom2(g - 2 * gamma);
    b.lower_k = base + 2LL * gamma;
    b.upper_k = base + 2LL * gamma * gamma;
    b.lower_s = base;
    b.upper_s = base + 2LL * gamma * gamma;
    b.w_k = k_weight(s);
    b.w_s = s_weight(s);
    b.within_k = b.lower_k <= b.w_k && b.w_k <= b.upper_k;
    b.within_s = b.lower_s <= b.w_s && b.w_s <= b.upper_s;
    b.attains_min_k = b.w_k == b.lower_k;
    b.attains_max_k = b.w_k == b.upper_k;
    return b;
}

std::vector<std::pair<int, long long>> prop2_spectrum(int gamma, int g) {
    if (gamma < 1 || g < 3 * gamma)
        fail(errc::invalid_argument, "prop2_spectrum: requires gamma >= 1 and g >= 3*gamma");
    std::vector<std::pair<int, long long>> out;
    const long long base = binom2(g - 2 * gamma) + 1LL * gamma * gamma + gamma;
    for (int k = 1; k <= gamma + 1; ++k)
        out.emplace_back(k, base + 1LL * k * k - 3 * k + 2);
    return out;
}

} // namespace sgw
