#include "schurq/shapes.hpp"

#include <algorithm>
#include <limits>

namespace schurq {

CellSet shifted_cells(const StrictPartition& lambda) {
    CellSet out;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = i; j <= i + lambda.part(i) - 1; ++j) out.insert({i, j});
    return out;
}

SkewShape::SkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {}

SkewShape SkewShape::parse(const std::string& literal) {
    auto slash = literal.find('/');
    if (slash == std::string::npos)
        return SkewShape(StrictPartition::parse(literal), StrictPartition{});
    if (literal.find('/', slash + 1) != std::string::npos)
        throw ParseError("more than one '/' in shape literal '" + literal + "'");
    return SkewShape(StrictPartition::parse(literal.substr(0, slash)),
                     StrictPartition::parse(literal.substr(slash + 1)));
}

std::string SkewShape::str() const {
    if (inner_.empty()) return outer_.str();
    return outer_.str() + "/" + inner_.str();
}

bool SkewShape::is_valid() const { return outer_.contains(inner_); }

CellSet SkewShape::cells() const {
    if (!is_valid())
        throw InvalidShape("inner diagram " + inner_.str() +
                           " is not contained in outer diagram " + outer_.str());
    CellSet out;
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = i + inner_.part(i); j <= i + outer_.part(i) - 1; ++j)
            out.insert({i, j});
    return out;
}

long long SkewShape::cell_count() const {
    if (!is_valid())
        throw InvalidShape("inner diagram not contained in outer diagram");
    return outer_.sum() - inner_.sum();
}

std::optional<SkewShape> read_skew_shape(const CellSet& cells) {
    if (cells.empty()) return SkewShape{};
    int max_row = cells.max_row();
    if (cells.min_row() < 1 || cells.min_col() < 1) return std::nullopt;

    constexpr int kAbsent = -1;
    std::vector<int> alpha(max_row + 1, kAbsent), beta(max_row + 1, kAbsent);
    for (int i = 1; i <= max_row; ++i) {
        int lo = std::numeric_limits<int>::max(), hi = 0, count = 0;
        for (Cell c : cells)
            if (c.row == i) {
                lo = std::min(lo, c.col);
                hi = std::max(hi, c.col);
                ++count;
            }
        if (count == 0) continue;  // fully skewed row, value chosen below
        if (hi - lo + 1 != count) return std::nullopt;  // row not contiguous
        if (lo < i) return std::nullopt;                // left of the diagonal
        alpha[i] = hi - i + 1;
        beta[i] = lo - i;
    }
    // Empty rows take the smallest value compatible with the rows below; the
    // bottom row always has cells, so the scan is well-founded.
    for (int i = max_row - 1; i >= 1; --i)
        if (alpha[i] == kAbsent) alpha[i] = beta[i] = alpha[i + 1] + 1;

    for (int i = 1; i < max_row; ++i)
        if (alpha[i] <= alpha[i + 1]) return std::nullopt;
    int inner_len = max_row;
    while (inner_len >= 1 && beta[inner_len] == 0) --inner_len;
    for (int i = 1; i <= inner_len; ++i) {
        if (beta[i] <= 0) return std::nullopt;  // zero inside the positive prefix
        if (i < inner_len && beta[i] <= beta[i + 1]) return std::nullopt;
    }

    SkewShape shape(StrictPartition(std::vector<int>(alpha.begin() + 1, alpha.end())),
                    StrictPartition(std::vector<int>(beta.begin() + 1,
                                                     beta.begin() + 1 + inner_len)));
    SCHURQ_CHECK(shape.cells() == cells, "read_skew_shape round-trip mismatch");
    return shape;
}

StrictPartition read_straight_shape(const CellSet& cells) {
    auto shape = read_skew_shape(cells);
    if (!shape || !shape->inner().empty())
        throw NotRealizable("cells do not form a straight shifted diagram");
    return shape->outer();
}

bool is_basic(const SkewShape& shape) {
    if (!shape.is_valid()) return false;
    const auto& l = shape.outer();
    const auto& m = shape.inner();
    if (m.empty()) return true;
    if (l.length() <= m.length()) return false;
    for (int i = 1; i <= m.length(); ++i) {
        if (l.part(i) <= m.part(i)) return false;
        if (l.part(i + 1) < m.part(i) - 1) return false;
    }
    return true;
}

namespace {

bool column_occupied(const CellSet& cells, int y) {
    for (Cell c : cells)
        if (c.col == y) return true;
    return false;
}

bool row_occupied(const CellSet& cells, int x) {
    for (Cell c : cells)
        if (c.row == x) return true;
    return false;
}

std::optional<CellSet> remove_empty_column(const CellSet& cells, int y) {
    CellSet shifted;
    for (Cell c : cells) shifted.insert(c.col > y ? Cell{c.row, c.col - 1} : c);
    if (!read_skew_shape(shifted)) return std::nullopt;
    return shifted;
}

std::optional<CellSet> remove_empty_row(const CellSet& cells, int x) {
    CellSet shifted;
    for (Cell c : cells)
        shifted.insert(c.row > x ? Cell{c.row - 1, c.col - 1} : Cell{c.row, c.col - 1});
    if (!read_skew_shape(shifted)) return std::nullopt;
    return shifted;
}

}  // namespace

SkewShape normalize_basic(const SkewShape& shape) {
    CellSet cells = shape.cells();
    bool changed = true;
    while (changed && !cells.empty()) {
        changed = false;
        int max_col = cells.max_col();
        for (int y = 1; y < max_col && !changed; ++y) {
            if (column_occupied(cells, y)) continue;
            if (auto next = remove_empty_column(cells, y)) {
                cells = std::move(*next);
                changed = true;
            }
        }
        if (changed) continue;
        int max_row = cells.max_row();
        for (int x = 1; x < max_row && !changed; ++x) {
            if (row_occupied(cells, x)) continue;
            if (auto next = remove_empty_row(cells, x)) {
                cells = std::move(*next);
                changed = true;
            }
        }
    }
    auto result = read_skew_shape(cells);
    SCHURQ_CHECK(result.has_value(), "normalization lost realizability");
    SCHURQ_CHECK(is_basic(*result), "normalization fixpoint is not basic");
    return *result;
}

CellSet border(const StrictPartition& lambda) {
    CellSet diagram = shifted_cells(lambda);
    CellSet out;
    for (Cell c : diagram)
        if (!diagram.contains({c.row + 1, c.col + 1})) out.insert(c);
    return out;
}

std::vector<SkewShape> border_substrips(const StrictPartition& lambda, int n) {
    if (n < 0) throw OutOfRange("border_substrips needs n >= 0");
    CellSet b = border(lambda);
    std::vector<SkewShape> out;
    for (const auto& nu : strict_subpartitions(lambda)) {
        if (lambda.sum() - nu.sum() != n) continue;
        SkewShape candidate(lambda, nu);
        bool inside = true;
        for (Cell c : candidate.cells())
            if (!b.contains(c)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(std::move(candidate));
    }
    return out;
}

std::vector<StrictPartition> corner_removals(const StrictPartition& lambda) {
    std::vector<StrictPartition> out;
    for (Cell c : corners(shifted_cells(lambda))) {
        std::vector<int> parts = lambda.parts();
        int x = c.row;
        SCHURQ_CHECK(x >= 1 && x <= lambda.length() &&
                         c.col == x + lambda.part(x) - 1,
                     "corner is not the right end of its row");
        parts[x - 1] -= 1;
        if (parts[x - 1] == 0) parts.erase(parts.begin() + (x - 1));
        // A corner at row x forces lambda_{x+1} <= lambda_x - 2, so the
        // decremented sequence is again strictly decreasing.
        out.emplace_back(std::move(parts));
    }
    return out;
}

OrthogonalMap orthogonal_transpose_map(const CellSet& cells) {
    if (cells.empty()) return {};
    int dr = 1 + cells.max_col();  // reflected rows are -col; top row becomes 1
    // The leftmost reflected column is -max_row; its lowermost box comes from
    // the bottom row's leftmost cell. Shift columns so that box hits the
    // diagonal.
    int min_col_in_bottom = 0;
    bool first = true;
    for (Cell c : cells) {
        if (c.row != cells.max_row()) continue;
        if (first || c.col < min_col_in_bottom) min_col_in_bottom = c.col;
        first = false;
    }
    int leftmost = -cells.max_row();
    int lowest_in_leftmost = dr - min_col_in_bottom;
    int dc = lowest_in_leftmost - leftmost;
    return {dr, dc};
}

CellSet orthogonal_transpose_cells(const CellSet& cells) {
    OrthogonalMap map = orthogonal_transpose_map(cells);
    CellSet out;
    for (Cell c : cells) out.insert(map(c));
    return out;
}

SkewShape orthogonal_transpose(const SkewShape& shape) {
    auto result = read_skew_shape(orthogonal_transpose_cells(shape.cells()));
    SCHURQ_CHECK(result.has_value(), "orthogonal transpose is not a skew shape");
    return *result;
}

}  // namespace schurq
