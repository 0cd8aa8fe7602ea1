#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sgw/semigroup.hpp"
#include "sgw/tree.hpp"

using sgw::Semigroup;

TEST_CASE("from_generators basic closures") {
    const auto s = Semigroup::from_generators({2, 3});
    CHECK(s.gaps() == std::vector<int>{1});
    CHECK(s.genus() == 1);
    CHECK(s.frobenius() == 1);
    CHECK(s.conductor() == 2);
    CHECK(s.multiplicity() == 2);
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
    CHECK(s.contains(100));
    CHECK(!s.contains(-3));
}

TEST_CASE("from_generators figure-1 semigroup") {
    const auto s = Semigroup::from_generators({4, 14, 29});
    CHECK(s.genus() == 20);
    CHECK(s.frobenius() == 39);
    CHECK(s.multiplicity() == 4);
    const auto gaps = s.gaps();
    REQUIRE(gaps.size() == 20);
    CHECK(gaps.back() == 39);
    std::vector<int> even_gaps;
    for (int l : gaps)
        if (l % 2 == 0) even_gaps.push_back(l);
    CHECK(even_gaps == std::vector<int>{2, 6, 10});
}

TEST_CASE("from_generators rejects non-cofinite input") {
    CHECK_THROWS_WITH_AS(Semigroup::from_generators({4, 6}),
                         doctest::Contains("gcd 2"), sgw::error);
    try {
        Semigroup::from_generators({4, 6});
    } catch (const sgw::error& e) {
        CHECK(e.code() == sgw::errc::not_cofinite);
    }
    CHECK_THROWS_AS(Semigroup::from_generators({}), sgw::error);
    CHECK_THROWS_AS(Semigroup::from_generators({0, 3}), sgw::error);
}

TEST_CASE("naturals is representable") {
    const auto n = Semigroup::naturals();
    CHECK(n.genus() == 0);
    CHECK(n.frobenius() == -1);
    CHECK(n.conductor() == 0);
    CHECK(n.multiplicity() == 1);
    CHECK(n.gaps().empty());
    CHECK(n.contains(0));
    CHECK(n.contains(1));
}

TEST_CASE("from_gaps") {
    const auto hyper = Semigroup::from_gaps({1, 3, 5, 7, 9});
    CHECK(hyper == Semigroup::from_generators({2, 11}));
    CHECK(hyper.genus() == 5);

    const auto s = Semigroup::from_gaps({1, 2, 3, 5, 9});
    CHECK(s == Semigroup::from_generators({4, 6, 7}));

    try {
        Semigroup::from_gaps({2, 4});
        FAIL("expected NotASemigroup");
    } catch (const sgw::error& e) {
        CHECK(e.code() == sgw::errc::not_a_semigroup);
        CHECK(std::string(e.what()).find("1 + 1 = 2") != std::string::npos);
    }
    CHECK_THROWS_AS(Semigroup::from_gaps({3, 1}), sgw::error);
    CHECK_THROWS_AS(Semigroup::from_gaps({0, 1}), sgw::error);
    CHECK(Semigroup::from_gaps(std::initializer_list<int>{}) == Semigroup::naturals());
}

TEST_CASE("apery sets") {
    CHECK(Semigroup::from_generators({2, 11}).apery_set(2) == std::vector<int>{0, 11});
    CHECK(Semigroup::from_generators({4, 6, 7}).apery_set(4) ==
          std::vector<int>{0, 13, 6, 7});
    const auto s = Semigroup::from_generators({2, 3});
    CHECK(s.apery_set(2) == std::vector<int>{0, 3});
    try {
        s.apery_set(1);
        FAIL("expected NotMember");
    } catch (const sgw::error& e) {
        CHECK(e.code() == sgw::errc::not_member);
    }
}

TEST_CASE("symmetry") {
    CHECK(Semigroup::from_generators({2, 11}).is_symmetric());
    CHECK(Semigroup::from_generators({4, 14, 29}).is_symmetric());
    const auto s = Semigroup::from_gaps({1, 2, 3, 5, 7, 9});  // <4,6,11,13>
    CHECK(s.genus() == 6);
    CHECK(s.frobenius() == 9);
    CHECK(!s.is_symmetric());
}

TEST_CASE("exhaustive invariants up to genus 10") {
    // mirror test as the independent symmetry oracle
    const auto mirror_symmetric = [](const Semigroup& s) {
        for (int x = 0; x <= s.frobenius(); ++x)
            if (s.contains(x) == s.contains(s.frobenius() - x)) return false;
        return true;
    };

    uint64_t seen = 0;
    sgw::enumerate(10, [&](const sgw::TreeNode& node) {
        ++seen;
        const Semigroup s = node.semigroup();
        const int g = s.genus();
        const int c = s.conductor();

        CHECK(s.frobenius() <= 2 * g - 1);
        CHECK(Semigroup::from_gaps(s.gaps()) == s);
        CHECK(s.is_symmetric() == mirror_symmetric(s));

        const auto ap = s.apery_set(s.multiplicity());
        for (int x = 0; x <= 3 * c; ++x) {
            const bool via_apery = x >= ap[static_cast<size_t>(x % s.multiplicity())];
            CHECK(s.contains(x) == via_apery);
        }
    });
    CHECK(seen == 478);  // total count of semigroups of genus <= 10
}
