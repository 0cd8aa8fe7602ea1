#include "sgw/tableau.hpp"

#include <algorithm>

namespace sgw {

PathTableau path_of(const Semigroup& s) {
    const int g = s.genus();
    if (g < 1) fail(errc::invalid_argument, "path_of: genus must be >= 1");
    PathTableau t;
    t.genus = g;
    t.steps.reserve(static_cast<size_t>(2 * g));
    for (int i = 1; i <= 2 * g; ++i)
        t.steps.push_back(s.contains(i) ? Step::Right : Step::Up);
    const auto gaps = s.gaps();
    t.rows_s.reserve(static_cast<size_t>(g));
    for (int j = g - 1; j >= 0; --j)
        t.rows_s.push_back(gaps[static_cast<size_t>(j)] - (j + 1));
    t.rows_k.assign(t.rows_s.begin() + 1, t.rows_s.end());
    return t;
}

namespace {

// Grid rows top-to-bottom; K mode keeps the top row, emptied.
std::vector<int> grid_rows(const PathTableau& t, TableauMode mode) {
    if (mode == TableauMode::S) return t.rows_s;
    std::vector<int> rows(1, 0);
    rows.insert(rows.end(), t.rows_k.begin(), t.rows_k.end());
    return rows;
}

} // namespace

std::string render_ascii(const PathTableau& t, TableauMode mode) {
    const int g = t.genus;
    std::string out = "path: ";
    for (Step s : t.steps) out += s == Step::Up ? 'U' : 'R';
    out += '\n';
    const std::string border = "+" + std::string(static_cast<size_t>(g), '-') + "+\n";
    out += border;
    for (int len : grid_rows(t, mode)) {
        out += '|';
        out.append(static_cast<size_t>(len), '#');
        out.append(static_cast<size_t>(g - len), ' ');
        out += "|\n";
    }
    out += border;
    return out;
}

DiffCells diff_cell_counts(const PathTableau& t, const PathTableau& diff_against,
                           TableauMode mode) {
    if (t.genus != diff_against.genus)
        fail(errc::genus_mismatch, "tableau diff requires equal genus");
    const auto a = grid_rows(t, mode);
    const auto b = grid_rows(diff_against, mode);
    DiffCells d;
    for (size_t i = 0; i < a.size(); ++i) {
        const int common = std::min(a[i], b[i]);
        d.shared += common;
        d.only_in_t += a[i] - common;
        d.only_in_diff += b[i] - common;
    }
    return d;
}

std::string render_svg(const PathTableau& t, TableauMode mode,
                       const PathTableau* diff_against) {
    constexpr int kCell = 12;
    constexpr const char* kGray = "#d3d3d3";
    constexpr const char* kRed = "#ff0000";
    constexpr const char* kGrid = "#0000ff";

    const int g = t.genus;
    const auto rows = grid_rows(t, mode);
    std::vector<int> base(rows.size(), 0);  // gray prefix length per row
    DiffCells d;
    if (diff_against) {
        d = diff_cell_counts(t, *diff_against, mode);
        const auto other = grid_rows(*diff_against, mode);
        for (size_t i = 0; i < rows.size(); ++i) base[i] = std::min(rows[i], other[i]);
    } else {
        for (size_t i = 0; i < rows.size(); ++i) base[i] = rows[i];
    }

    const int side = g * kCell + 2;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(side) + "\" height=\"" + std::to_string(side) + "\" viewBox=\"0 0 " +
           std::to_string(side) + " " + std::to_string(side) + "\">\n";
    svg += "<desc>mode=" + std::string(mode == TableauMode::S ? "S" : "K") +
           " genus=" + std::to_string(g) + " boxes=" + std::to_string(t.box_count(mode)) +
           " red=" + std::to_string(diff_against ? d.only_in_t : 0) +
           " missing=" + std::to_string(diff_against ? d.only_in_diff : 0) + "</desc>\n";
    svg += "<rect x=\"1\" y=\"1\" width=\"" + std::to_string(g * kCell) + "\" height=\"" +
           std::to_string(g * kCell) + "\" fill=\"none\" stroke=\"" + kGrid +
           "\" stroke-width=\"1\"/>\n";

    // rows[0] is the top grid row; cells grow from the left wall
    for (size_t i = 0; i < rows.size(); ++i) {
        const int y = 1 + static_cast<int>(i) * kCell;
        for (int col = 0; col < rows[i]; ++col) {
            const char* fill = col < base[i] ? kGray : kRed;
            svg += "<rect x=\"" + std::to_string(1 + col * kCell) + "\" y=\"" +
                   std::to_string(y) + "\" width=\"" + std::to_string(kCell) + "\" height=\"" +
                   std::to_string(kCell) + "\" fill=\"" + std::string(fill) + "\" stroke=\"" +
                   kGrid + "\" stroke-width=\"1\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace sgw
