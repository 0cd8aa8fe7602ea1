#pragma once

#include <optional>
#include <vector>

#include "sgw/semigroup.hpp"

namespace sgw {

// All weight and ramification invariants of one semigroup. The gamma-dependent
// fields (even_heads, odd_members_below_2g, r_k) are populated only when a
// certified gamma was supplied.
struct WeightReport {
    long long w_s = 0;
    long long w_k = 0;
    long long ramification = 0;
    int k_odd_tail = 0;
    std::optional<int> gamma;
    std::vector<int> even_heads;            // n_1 < ... < n_gamma
    std::vector<int> odd_members_below_2g;  // u_1 > ... > u_gamma
    std::optional<long long> r_k;
};

// W_S = sum over all gaps of (l_i - i); 0 for genus 0.
long long s_weight(const Semigroup& s);

// W_K = sum over the first g-1 gaps of (l_i - i), plus g-1; 0 for genus <= 1.
long long k_weight(const Semigroup& s);

// R = sum over the g smallest nonzero members of (m_i - i); 0 for genus 0.
long long total_ramification(const Semigroup& s);

// k(S): odd members in [conductor, 2g). Everything at or above the conductor
// is a member, so this is a pure interval count. 0 for genus 0.
int odd_tail_count(const Semigroup& s);

// R_K = sum(n_i + u_i) + sum_{i=1}^{g-2*gamma-1} (4*gamma + 2i) - C(g,2) - 2k.
// Requires an affirmative gamma certificate (errc::not_gamma_hyperelliptic)
// and exactly gamma odd nonzero members below 2g (errc::malformed_odd_list).
long long k_ramification(const Semigroup& s, int gamma);

WeightReport weight_report(const Semigroup& s, std::optional<int> gamma = std::nullopt);

// n(n-1)/2 for n >= 2, else 0.
constexpr long long binom2(long long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

} // namespace sgw
