#pragma once

#include <utility>
#include <vector>

#include "sgw/semigroup.hpp"

namespace sgw {

// Evidence for (or against) gamma-hyperellipticity:
//   condition 1: exactly gamma even members in [2, 4*gamma];
//   condition 2: the (gamma+1)st positive member equals 4*gamma + 2.
struct GammaCertificate {
    int gamma = 0;
    bool even_count_ok = false;
    bool pivot_ok = false;
    std::vector<int> even_elements_in_window;
    int pivot_element = 0;

    bool affirmative() const { return even_count_ok && pivot_ok; }
};

// Bound values and flags for inequalities (1) (K-weight) and (2) (S-weight).
struct BoundCheck {
    long long lower_k = 0, upper_k = 0;
    long long lower_s = 0, upper_s = 0;
    long long w_k = 0, w_s = 0;
    bool within_k = false, within_s = false;
    bool attains_min_k = false, attains_max_k = false;
};

GammaCertificate certify(const Semigroup& s, int gamma);

// All gamma <= gamma_max with an affirmative certificate.
std::vector<int> detect_gammas(const Semigroup& s, int gamma_max);

// <4, 4*gamma+2, 2g-4*gamma+1>, verified to have genus g and an affirmative
// certificate; errc::construction_out_of_range otherwise.
Semigroup make_maximizer(int gamma, int g);

// Members 0, every even >= 2*gamma+2, every odd >= 2(g-gamma)+1; requires
// g >= 3*gamma+1 (below that the pivot condition fails).
Semigroup make_minimizer(int gamma, int g);

// <4, 4*gamma+2, 2g-2*gamma-2k+3, 2g-2*gamma+2k+1> for k in 1..gamma+1,
// verified: genus g, frobenius 2g-2*gamma+2k-3, multiplicity 4, certificate.
Semigroup make_prop2_member(int gamma, int g, int k);

// Requires an affirmative certificate and g >= 2*gamma+1.
BoundCheck check_bounds(const Semigroup& s, int gamma);

// Expected multiplicity-4 K-weights: (k, C(g-2*gamma,2) + gamma^2 + gamma
// + k^2 - 3k + 2) for k = 1..gamma+1.
std::vector<std::pair<int, long long>> prop2_spectrum(int gamma, int g);

} // namespace sgw
