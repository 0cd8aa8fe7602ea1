#include "sgw/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sgw {

namespace {

std::string join(std::span<const int> xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

} // namespace

Semigroup Semigroup::from_mask(const std::vector<uint8_t>& mem, int frobenius) {
    Semigroup s;
    s.frobenius_ = frobenius;
    const int c = frobenius + 1;
    s.words_.assign((static_cast<size_t>(c) + 63) / 64, 0);
    int genus = 0;
    for (int i = 0; i < c; ++i) {
        if (mem[static_cast<size_t>(i)])
            s.words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
        else
            ++genus;
    }
    s.genus_ = genus;
    int m = 1;
    while (!s.contains(m)) ++m;
    s.multiplicity_ = m;
    return s;
}

Semigroup Semigroup::from_generators(std::span<const int> gens) {
    if (gens.empty())
        fail(errc::invalid_argument, "from_generators: empty generator list");
    for (int a : gens)
        if (a < 1)
            fail(errc::invalid_argument, "from_generators: generators must be >= 1");

    int d = 0;
    for (int a : gens) d = std::gcd(d, a);
    if (d != 1)
        fail(errc::not_cofinite,
             "generators {" + join(gens) + "} have gcd " + std::to_string(d) +
                 "; the complement is infinite");

    const int m = *std::min_element(gens.begin(), gens.end());
    const int mx = *std::max_element(gens.begin(), gens.end());

    // Sieve sums until the member mask stabilizes: a run of m consecutive
    // members at [w, w+m) pins every x >= w inside S, so the last gap below w
    // is the Frobenius number.
    int limit = std::max(2 * mx + 2, 64);
    for (;;) {
        std::vector<uint8_t> mem(static_cast<size_t>(limit) + 1, 0);
        mem[0] = 1;
        for (int i = 1; i <= limit; ++i) {
            for (int a : gens) {
                if (i >= a && mem[static_cast<size_t>(i - a)]) {
                    mem[static_cast<size_t>(i)] = 1;
                    break;
                }
            }
        }
        int run = 0;
        for (int i = 0; i <= limit; ++i) {
            run = mem[static_cast<size_t>(i)] ? run + 1 : 0;
            if (run == m) {
                const int window_start = i - m + 1;
                int frob = -1;
                for (int j = window_start - 1; j >= 1; --j) {
                    if (!mem[static_cast<size_t>(j)]) {
                        frob = j;
                        break;
                    }
                }
                return from_mask(mem, frob);
            }
        }
        limit *= 2;
    }
}

Semigroup Semigroup::from_generators(std::initializer_list<int> gens) {
    return from_generators(std::span<const int>(gens.begin(), gens.size()));
}

bool gaps_form_semigroup(std::span<const int> gaps, std::pair<int, int>* witness) {
    if (gaps.empty()) return true;
    const int frob = gaps.back();
    std::vector<uint8_t> mem(static_cast<size_t>(frob) + 1, 1);
    for (int l : gaps) mem[static_cast<size_t>(l)] = 0;
    // a + b <= frob with a, b nonzero members and the sum a gap
    for (int a = 1; 2 * a <= frob; ++a) {
        if (!mem[static_cast<size_t>(a)]) continue;
        for (int b = a; a + b <= frob; ++b) {
            if (mem[static_cast<size_t>(b)] && !mem[static_cast<size_t>(a + b)]) {
                if (witness) *witness = {a, b};
                return false;
            }
        }
    }
    return true;
}

Semigroup Semigroup::from_gaps(std::span<const int> gaps) {
    for (size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] < 1)
            fail(errc::invalid_argument, "from_gaps: gaps must be positive");
        if (i > 0 && gaps[i] <= gaps[i - 1])
            fail(errc::invalid_argument, "from_gaps: gaps must be strictly increasing");
    }
    std::pair<int, int> witness{0, 0};
    if (!gaps_form_semigroup(gaps, &witness))
        fail(errc::not_a_semigroup,
             "complement of {" + join(gaps) + "} is not closed: " +
                 std::to_string(witness.first) + " + " + std::to_string(witness.second) +
                 " = " + std::to_string(witness.first + witness.second) + " is a gap");
    if (gaps.empty()) return naturals();
    const int frob = gaps.back();
    std::vector<uint8_t> mem(static_cast<size_t>(frob) + 1, 1);
    for (int l : gaps) mem[static_cast<size_t>(l)] = 0;
    return from_mask(mem, frob);
}

Semigroup Semigroup::from_gaps(std::initializer_list<int> gaps) {
    return from_gaps(std::span<const int>(gaps.begin(), gaps.size()));
}

std::vector<int> Semigroup::gaps() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(genus_));
    for (int i = 1; i <= frobenius_; ++i)
        if (!contains(i)) out.push_back(i);
    return out;
}

std::vector<int> Semigroup::smallest_members(int count) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(std::max(count, 0)));
    for (int x = 1; static_cast<int>(out.size()) < count; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

int Semigroup::nth_member(int n) const {
    if (n < 1) fail(errc::invalid_argument, "nth_member: n must be >= 1");
    int seen = 0;
    for (int x = 1;; ++x) {
        if (contains(x) && ++seen == n) return x;
    }
}

std::vector<int> Semigroup::apery_set(int n) const {
    if (n < 1 || !contains(n))
        fail(errc::not_member, "apery_set: " + std::to_string(n) + " is not a member");
    std::vector<int> out(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) {
        int x = r;
        while (!contains(x)) x += n;
        out[static_cast<size_t>(r)] = x;
    }
    return out;
}

} // namespace sgw
