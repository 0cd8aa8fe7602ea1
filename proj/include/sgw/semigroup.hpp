#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sgw/errors.hpp"

namespace sgw {

// Canonical numerical semigroup: membership bits over [0, conductor), plus the
// derived invariants. Everything at or above the conductor is implicitly a
// member, so queries there never touch storage. Immutable after construction.
//
// The full semigroup N is representable: frobenius -1, conductor 0, empty bits.
class Semigroup {
public:
    // Smallest additive submonoid of N containing `gens`.
    // Throws errc::not_cofinite when gcd(gens) != 1.
    static Semigroup from_generators(std::span<const int> gens);
    static Semigroup from_generators(std::initializer_list<int> gens);

    // Semigroup whose gap set is exactly `gaps` (strictly increasing, >= 1).
    // Throws errc::not_a_semigroup with a witnessing pair when the complement
    // is not closed under addition.
    static Semigroup from_gaps(std::span<const int> gaps);
    static Semigroup from_gaps(std::initializer_list<int> gaps);

    static Semigroup naturals() { return from_generators({1}); }

    int genus() const { return genus_; }
    int frobenius() const { return frobenius_; }
    int conductor() const { return frobenius_ + 1; }
    int multiplicity() const { return multiplicity_; }

    bool contains(int x) const {
        if (x < 0) return false;
        if (x > frobenius_) return true;
        return (words_[static_cast<size_t>(x) >> 6] >> (x & 63)) & 1u;
    }

    // The g gaps in increasing order. Inverse to from_gaps.
    std::vector<int> gaps() const;

    // The gamma smallest nonzero members, in increasing order.
    std::vector<int> smallest_members(int count) const;

    // nth positive member, n >= 1.
    int nth_member(int n) const;

    // Least member of each residue class mod n. Throws errc::not_member
    // when n is not a (positive) member.
    std::vector<int> apery_set(int n) const;

    // frobenius == 2*genus - 1. The mirror characterisation
    // (x in S <=> frobenius - x not in S) is cross-checked in the test suite.
    bool is_symmetric() const { return frobenius_ == 2 * genus_ - 1; }

    bool operator==(const Semigroup& other) const {
        return frobenius_ == other.frobenius_ && words_ == other.words_;
    }

private:
    Semigroup() = default;

    // Membership mask over [0, limit]; frobenius is the largest unset index.
    static Semigroup from_mask(const std::vector<uint8_t>& mem, int frobenius);

    std::vector<uint64_t> words_;  // bit i, 0 <= i < conductor
    int genus_ = 0;
    int frobenius_ = -1;
    int multiplicity_ = 1;
};

// Validation used by from_gaps and by the brute-force enumerator: is the
// complement of `gaps` (strictly increasing, positive) closed under addition?
// On failure and when `witness` is non-null, stores members a <= b with
// a + b a gap.
bool gaps_form_semigroup(std::span<const int> gaps, std::pair<int, int>* witness = nullptr);

} // namespace sgw
