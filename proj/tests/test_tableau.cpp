#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sgw/gamma.hpp"
#include "sgw/semigroup.hpp"
#include "sgw/tableau.hpp"
#include "sgw/tree.hpp"
#include "sgw/weights.hpp"

using sgw::PathTableau;
using sgw::Semigroup;
using sgw::Step;
using sgw::TableauMode;

namespace {

long long count_char(const std::string& s, char c) {
    return std::count(s.begin(), s.end(), c);
}

long long count_substr(const std::string& hay, const std::string& needle) {
    long long n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("path_of") {
    const auto t = sgw::path_of(Semigroup::from_generators({2, 3}));
    CHECK(t.steps == std::vector<Step>{Step::Up, Step::Right});
    CHECK(t.rows_s == std::vector<int>{0});
    CHECK(t.rows_k.empty());

    const auto h = sgw::path_of(Semigroup::from_generators({2, 11}));
    std::string steps;
    for (Step s : h.steps) steps += s == Step::Up ? 'U' : 'R';
    CHECK(steps == "URURURURUR");
    CHECK(h.rows_s == std::vector<int>{4, 3, 2, 1, 0});

    const auto f = sgw::path_of(Semigroup::from_generators({4, 14, 29}));
    CHECK(f.box_count(TableauMode::S) == 109);
    CHECK(f.box_count(TableauMode::K) == 90);

    CHECK_THROWS_AS(sgw::path_of(Semigroup::naturals()), sgw::error);
}

TEST_CASE("render_ascii") {
    const auto tiny = sgw::render_ascii(sgw::path_of(Semigroup::from_generators({2, 3})),
                                        TableauMode::S);
    CHECK(count_char(tiny, '#') == 0);
    CHECK(tiny == "path: UR\n+-+\n| |\n+-+\n");

    const auto h = sgw::render_ascii(sgw::path_of(Semigroup::from_generators({2, 11})),
                                     TableauMode::S);
    CHECK(count_char(h, '#') == 10);

    const auto k = sgw::render_ascii(sgw::path_of(Semigroup::from_generators({4, 14, 29})),
                                     TableauMode::K);
    CHECK(count_char(k, '#') == 90);
    // top grid line is empty in K mode
    const auto first_row = k.substr(k.find("+\n|") + 2);
    CHECK(first_row.substr(0, 22) == "|" + std::string(20, ' ') + "|");
}

TEST_CASE("diff cell counts") {
    const auto max3 = sgw::path_of(sgw::make_maximizer(3, 20));
    const auto min3 = sgw::path_of(sgw::make_minimizer(3, 20));
    const auto d = sgw::diff_cell_counts(max3, min3, TableauMode::K);
    CHECK(d.only_in_t == 12);  // 109 - 97
    CHECK(d.only_in_diff == 0);
    CHECK(d.shared == 78);

    const auto self = sgw::diff_cell_counts(max3, max3, TableauMode::K);
    CHECK(self.only_in_t == 0);
    CHECK(self.only_in_diff == 0);

    // shapes that do not dominate each other report both one-sided counts
    const auto a = sgw::path_of(Semigroup::from_gaps({1, 2, 5}));
    const auto b = sgw::path_of(Semigroup::from_gaps({1, 3, 5}));
    const auto ab = sgw::diff_cell_counts(a, b, TableauMode::S);
    CHECK(ab.only_in_t == 0);
    CHECK(ab.only_in_diff == 1);
    CHECK(ab.shared == 2);

    CHECK_THROWS_AS(
        sgw::diff_cell_counts(a, sgw::path_of(Semigroup::from_generators({2, 3})),
                              TableauMode::S),
        sgw::error);
}

TEST_CASE("render_svg") {
    const auto max3 = sgw::path_of(sgw::make_maximizer(3, 20));
    const auto min3 = sgw::path_of(sgw::make_minimizer(3, 20));

    const auto svg = sgw::render_svg(max3, TableauMode::K, &min3);
    CHECK(count_substr(svg, "#ff0000") == 12);
    CHECK(count_substr(svg, "#d3d3d3") == 78);
    CHECK(svg.find("boxes=90 red=12 missing=0") != std::string::npos);
    CHECK(svg == sgw::render_svg(max3, TableauMode::K, &min3));  // byte stable

    const auto self = sgw::render_svg(max3, TableauMode::K, &max3);
    CHECK(count_substr(self, "#ff0000") == 0);

    const auto plain = sgw::render_svg(sgw::path_of(Semigroup::from_generators({2, 11})),
                                       TableauMode::S);
    CHECK(count_substr(plain, "#d3d3d3") == 10);
    CHECK(count_substr(plain, "#ff0000") == 0);

    const auto other = sgw::path_of(Semigroup::from_generators({2, 11}));
    CHECK_THROWS_AS(sgw::render_svg(max3, TableauMode::K, &other), sgw::error);
}

TEST_CASE("svg golden for the 1-gap semigroup") {
    const auto svg = sgw::render_svg(sgw::path_of(Semigroup::from_generators({2, 3})),
                                     TableauMode::S);
    const std::string expected =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"14\" "
        "height=\"14\" viewBox=\"0 0 14 14\">\n"
        "<desc>mode=S genus=1 boxes=0 red=0 missing=0</desc>\n"
        "<rect x=\"1\" y=\"1\" width=\"12\" height=\"12\" fill=\"none\" "
        "stroke=\"#0000ff\" stroke-width=\"1\"/>\n"
        "</svg>\n";
    CHECK(svg == expected);
}

TEST_CASE("tableau weights agree with the algebraic weights (genus <= 10)") {
    sgw::enumerate(10, [&](const sgw::TreeNode& node) {
        if (node.genus() == 0) return;
        const Semigroup s = node.semigroup();
        const auto t = sgw::path_of(s);
        const int g = s.genus();

        CHECK(t.box_count(TableauMode::S) == sgw::s_weight(s));
        CHECK(t.box_count(TableauMode::K) + (g - 1) == sgw::k_weight(s));
        CHECK(std::count(t.steps.begin(), t.steps.end(), Step::Up) == g);
        CHECK(std::is_sorted(t.rows_s.rbegin(), t.rows_s.rend()));
        for (int r : t.rows_s) CHECK(r >= 0);
    });
}
