#include "sgw/weights.hpp"

#include <string>

#include "sgw/gamma.hpp"

namespace sgw {

long long s_weight(const Semigroup& s) {
    long long sum = 0;
    int i = 0;
    for (int l : s.gaps()) sum += l - ++i;
    return sum;
}

long long k_weight(const Semigroup& s) {
    const int g = s.genus();
    if (g == 0) return 0;
    // W_S minus the top gap's row, plus g-1
    return s_weight(s) - (s.frobenius() - g) + (g - 1);
}

long long total_ramification(const Semigroup& s) {
    const int g = s.genus();
    long long sum = 0;
    int i = 0;
    for (int m : s.smallest_members(g)) sum += m - ++i;
    return sum;
}

int odd_tail_count(const Semigroup& s) {
    const int g = s.genus();
    if (g == 0) return 0;
    int count = 0;
    for (int x = s.conductor(); x < 2 * g; ++x)
        if (x % 2 == 1) ++count;
    return count;
}

namespace {

// gamma smallest nonzero even members; for a certified semigroup these all
// lie in [2, 4*gamma].
std::vector<int> even_heads_of(const Semigroup& s, int gamma) {
    std::vector<int> heads;
    for (int x = 2; static_cast<int>(heads.size()) < gamma; x += 2)
        if (s.contains(x)) heads.push_back(x);
    return heads;
}

std::vector<int> odd_members_below(const Semigroup& s, int bound) {
    std::vector<int> odds;
    for (int x = bound - (bound % 2 == 0 ? 1 : 2); x >= 1; x -= 2)
        if (s.contains(x)) odds.push_back(x);
    return odds;  // decreasing
}

} // namespace

long long k_ramification(const Semigroup& s, int gamma) {
    if (gamma < 0)
        fail(errc::invalid_argument, "k_ramification: gamma must be >= 0");
    if (!certify(s, gamma).affirmative())
        fail(errc::not_gamma_hyperelliptic,
             "k_ramification: semigroup is not " + std::to_string(gamma) + "-hyperelliptic");

    const int g = s.genus();
    const auto heads = even_heads_of(s, gamma);
    const auto odds = odd_members_below(s, 2 * g);
    if (static_cast<int>(odds.size()) != gamma)
        fail(errc::malformed_odd_list,
             "k_ramification: expected " + std::to_string(gamma) +
                 " odd members below 2g, found " + std::to_string(odds.size()));

    long long sum = 0;
    for (int n : heads) sum += n;
    for (int u : odds) sum += u;
    const long long t = g - 2 * gamma - 1;
    sum += 4LL * gamma * t + t * (t + 1);  // sum_{i=1..t} (4*gamma + 2i)
    return sum - binom2(g) - 2LL * odd_tail_count(s);
}

WeightReport weight_report(const Semigroup& s, std::optional<int> gamma) {
    WeightReport r;
    r.w_s = s_weight(s);
    r.w_k = k_weight(s);
    r.ramification = total_ramification(s);
    r.k_odd_tail = odd_tail_count(s);
    if (gamma) {
        r.r_k = k_ramification(s, *gamma);  // throws when not certified
        r.gamma = *gamma;
        r.even_heads = even_heads_of(s, *gamma);
        r.odd_members_below_2g = odd_members_below(s, 2 * s.genus());
    }
    return r;
}

} // namespace sgw
