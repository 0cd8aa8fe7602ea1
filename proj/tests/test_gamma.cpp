#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgw/gamma.hpp"
#include "sgw/semigroup.hpp"
#include "sgw/tree.hpp"
#include "sgw/weights.hpp"

using sgw::Semigroup;

TEST_CASE("certify") {
    const auto fig1 = Semigroup::from_generators({4, 14, 29});
    const auto cert = sgw::certify(fig1, 3);
    CHECK(cert.affirmative());
    CHECK(cert.even_elements_in_window == std::vector<int>{4, 8, 12});
    CHECK(cert.pivot_element == 14);

    const auto hy = sgw::certify(Semigroup::from_generators({2, 11}), 0);
    CHECK(hy.affirmative());
    CHECK(hy.pivot_element == 2);
    CHECK(hy.even_elements_in_window.empty());

    const auto bad = sgw::certify(Semigroup::from_generators({4, 5, 6}), 1);
    CHECK(!bad.affirmative());
    CHECK(bad.even_count_ok);
    CHECK(!bad.pivot_ok);
    CHECK(bad.pivot_element == 5);
}

TEST_CASE("detect_gammas") {
    CHECK(sgw::detect_gammas(Semigroup::from_gaps({1, 2, 3, 5, 7, 9}), 5) ==
          std::vector<int>{1});
    CHECK(sgw::detect_gammas(Semigroup::from_generators({2, 11}), 5) == std::vector<int>{0});
    CHECK(sgw::detect_gammas(Semigroup::from_generators({5, 6, 7, 8, 9}), 5).empty());
}

TEST_CASE("make_maximizer") {
    const auto s = sgw::make_maximizer(3, 20);
    CHECK(s == Semigroup::from_generators({4, 14, 29}));
    CHECK(sgw::k_weight(s) == 109);
    CHECK(sgw::k_weight(s) == sgw::binom2(14) + 2 * 9);
    CHECK(s.is_symmetric());  // grounds the u_i >= u_i(S0) + 2 step

    const auto hy = sgw::make_maximizer(0, 5);
    CHECK(hy == Semigroup::from_generators({2, 11}));
    CHECK(sgw::k_weight(hy) == sgw::binom2(5));

    try {
        sgw::make_maximizer(1, 4);  // odd generator 5 lands below the pivot
        FAIL("expected ConstructionOutOfRange");
    } catch (const sgw::error& e) {
        CHECK(e.code() == sgw::errc::construction_out_of_range);
    }
}

TEST_CASE("make_minimizer") {
    const auto s = sgw::make_minimizer(3, 20);
    CHECK(s.genus() == 20);
    CHECK(sgw::k_weight(s) == 97);
    CHECK(sgw::k_weight(s) == sgw::binom2(14) + 6);
    std::vector<int> expected;
    for (int x = 1; x <= 6; ++x) expected.push_back(x);
    for (int x = 7; x <= 33; x += 2) expected.push_back(x);
    CHECK(s.gaps() == expected);

    const auto t = sgw::make_minimizer(1, 5);
    CHECK(t.gaps() == std::vector<int>{1, 2, 3, 5, 7});
    CHECK(sgw::k_weight(t) == 5);

    CHECK(sgw::make_minimizer(0, 6) == Semigroup::from_generators({2, 13}));
    CHECK(sgw::k_weight(sgw::make_minimizer(0, 6)) == 15);

    CHECK_THROWS_AS(sgw::make_minimizer(1, 3), sgw::error);  // needs g >= 3*gamma+1
}

TEST_CASE("make_prop2_member") {
    const auto s = sgw::make_prop2_member(1, 4, 1);
    CHECK(s == Semigroup::from_generators({4, 6, 7, 9}));
    CHECK(s.gaps() == std::vector<int>{1, 2, 3, 5});
    CHECK(sgw::s_weight(s) == 1);
    CHECK(sgw::k_weight(s) == 3);

    CHECK(sgw::make_prop2_member(3, 20, 4) == sgw::make_maximizer(3, 20));
    CHECK(sgw::k_weight(sgw::make_prop2_member(3, 20, 4)) == 109);

    try {
        sgw::make_prop2_member(1, 4, 2);  // generator 5 breaks the pivot
        FAIL("expected ConstructionOutOfRange");
    } catch (const sgw::error& e) {
        CHECK(e.code() == sgw::errc::construction_out_of_range);
    }
    CHECK_THROWS_AS(sgw::make_prop2_member(0, 5, 1), sgw::error);
    CHECK_THROWS_AS(sgw::make_prop2_member(2, 10, 4), sgw::error);  // k > gamma+1
}

TEST_CASE("check_bounds") {
    const auto g6 = Semigroup::from_gaps({1, 2, 3, 5, 7, 9});
    const auto b = sgw::check_bounds(g6, 1);
    CHECK(b.lower_k == 8);
    CHECK(b.upper_k == 8);
    CHECK(b.w_k == 8);
    CHECK(b.within_k);
    CHECK(b.within_s);
    CHECK(b.attains_min_k);
    CHECK(b.attains_max_k);

    const auto bmax = sgw::check_bounds(sgw::make_maximizer(3, 20), 3);
    CHECK(bmax.w_k == 109);
    CHECK(bmax.w_k == bmax.upper_k);
    CHECK(bmax.attains_max_k);
    CHECK(!bmax.attains_min_k);

    const auto bmin = sgw::check_bounds(sgw::make_minimizer(3, 20), 3);
    CHECK(bmin.w_k == 97);
    CHECK(bmin.w_k == bmin.lower_k);
    CHECK(bmin.attains_min_k);

    CHECK_THROWS_AS(sgw::check_bounds(Semigroup::from_generators({2, 3}), 1), sgw::error);
}

TEST_CASE("prop2_spectrum") {
    using pair_list = std::vector<std::pair<int, long long>>;
    CHECK(sgw::prop2_spectrum(1, 6) == pair_list{{1, 8}, {2, 8}});
    CHECK(sgw::prop2_spectrum(3, 20) == pair_list{{1, 103}, {2, 103}, {3, 105}, {4, 109}});
    CHECK(sgw::prop2_spectrum(2, 10) == pair_list{{1, 21}, {2, 21}, {3, 23}});
}

TEST_CASE("certified semigroups contain every even >= 4*gamma (genus <= 10)") {
    sgw::enumerate(10, [&](const sgw::TreeNode& node) {
        const Semigroup s = node.semigroup();
        for (int gamma : sgw::detect_gammas(s, s.genus())) {
            for (int x = std::max(4 * gamma, 2); x < s.conductor(); x += 2)
                CHECK(s.contains(x));
        }
    });
}

TEST_CASE("maximizer is symmetric wherever it constructs") {
    for (int gamma = 0; gamma <= 4; ++gamma) {
        for (int g = 4 * gamma + 1; g <= 4 * gamma + 6; ++g) {
            const auto s = sgw::make_maximizer(gamma, g);
            CHECK(s.is_symmetric());
            CHECK(s.frobenius() == 2 * g - 1);
        }
    }
}

TEST_CASE("gamma=1 pins W_K exactly (genus <= 10)") {
    for (int g = 4; g <= 10; ++g) {
        sgw::enumerate_gamma_hyperelliptic(1, g, [&](const sgw::TreeNode& node) {
            CHECK(sgw::k_weight(node.semigroup()) == sgw::binom2(g - 2) + 2);
        });
    }
}
