#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgw/semigroup.hpp"

namespace sgw {

enum class Step : uint8_t { Up, Right };
enum class TableauMode { S, K };

// Dyck-path encoding of a semigroup of genus g: 2g steps over i = 1..2g, step
// i Up iff i is a gap. rows_s lists the tableau row lengths top-to-bottom
// (entry j is the row of gap l_{g-j}, of length l_{g-j} - (g-j)); rows_k drops
// the uppermost row.
struct PathTableau {
    int genus = 0;
    std::vector<Step> steps;
    std::vector<int> rows_s;
    std::vector<int> rows_k;

    long long box_count(TableauMode mode) const {
        long long sum = 0;
        for (int r : mode == TableauMode::S ? rows_s : rows_k) sum += r;
        return sum;
    }
};

// Requires genus >= 1.
PathTableau path_of(const Semigroup& s);

// Monospace grid, one line per tableau row (top first), '#' for boxes, with
// the step string above it. K mode keeps the full g-row grid but leaves the
// top row empty.
std::string render_ascii(const PathTableau& t, TableauMode mode);

// Cell-wise comparison on the grid: rows of t vs rows of diff_against.
struct DiffCells {
    long long shared = 0;      // cells in both
    long long only_in_t = 0;   // painted red
    long long only_in_diff = 0;
};
DiffCells diff_cell_counts(const PathTableau& t, const PathTableau& diff_against,
                           TableauMode mode);

// SVG 1.1 document: blue grid outline, 12px cells. Without a diff all boxes
// are gray; with one, cells shared with diff_against are gray and cells only
// in t are red. Cells only in diff_against are not drawn; all three counts are
// recorded in the <desc> element. Byte-deterministic for fixed inputs.
// Throws errc::genus_mismatch when the genera differ.
std::string render_svg(const PathTableau& t, TableauMode mode,
                       const PathTableau* diff_against = nullptr);

} // namespace sgw
