#include "schurq/cells.hpp"

#include <algorithm>
#include <limits>

#include "schurq/errors.hpp"

namespace schurq {

CellSet::CellSet(std::initializer_list<Cell> cells) {
    for (Cell c : cells) insert(c);
}

CellSet::CellSet(const std::vector<Cell>& cells) {
    for (Cell c : cells) insert(c);
}

std::vector<Cell> CellSet::sorted() const {
    std::vector<Cell> out(cells_.begin(), cells_.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> CellSet::reading_order() const {
    std::vector<Cell> out(cells_.begin(), cells_.end());
    std::sort(out.begin(), out.end(), [](Cell a, Cell b) {
        if (a.row != b.row) return a.row > b.row;
        return a.col < b.col;
    });
    return out;
}

namespace {
template <typename F>
int extremum(const CellSet& s, F f, bool want_min) {
    SCHURQ_CHECK(!s.empty(), "extremum of empty cell set");
    int best = want_min ? std::numeric_limits<int>::max()
                        : std::numeric_limits<int>::min();
    for (Cell c : s) {
        int v = f(c);
        best = want_min ? std::min(best, v) : std::max(best, v);
    }
    return best;
}
}  // namespace

int CellSet::min_row() const { return extremum(*this, [](Cell c) { return c.row; }, true); }
int CellSet::max_row() const { return extremum(*this, [](Cell c) { return c.row; }, false); }
int CellSet::min_col() const { return extremum(*this, [](Cell c) { return c.col; }, true); }
int CellSet::max_col() const { return extremum(*this, [](Cell c) { return c.col; }, false); }

CellSet CellSet::set_minus(const CellSet& other) const {
    CellSet out;
    for (Cell c : *this)
        if (!other.contains(c)) out.insert(c);
    return out;
}

CellSet CellSet::set_union(const CellSet& other) const {
    CellSet out = *this;
    for (Cell c : other) out.insert(c);
    return out;
}

std::vector<CellSet> components(const CellSet& cells) {
    std::vector<CellSet> out;
    CellSet seen;
    for (Cell start : cells.sorted()) {
        if (seen.contains(start)) continue;
        CellSet comp;
        std::vector<Cell> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            comp.insert(c);
            const Cell nbrs[4] = {{c.row - 1, c.col}, {c.row + 1, c.col},
                                  {c.row, c.col - 1}, {c.row, c.col + 1}};
            for (Cell n : nbrs) {
                if (cells.contains(n) && !seen.contains(n)) {
                    seen.insert(n);
                    stack.push_back(n);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const CellSet& a, const CellSet& b) { return a.min_col() < b.min_col(); });
    for (size_t i = 1; i < out.size(); ++i)
        SCHURQ_CHECK(out[i - 1].min_col() != out[i].min_col(),
                     "components share a leftmost column; ordering undefined");
    return out;
}

std::vector<Cell> corners(const CellSet& cells) {
    std::vector<Cell> out;
    for (Cell c : cells.sorted())
        if (!cells.contains({c.row + 1, c.col}) && !cells.contains({c.row, c.col + 1}))
            out.push_back(c);
    return out;
}

bool is_broken_border_strip(const CellSet& cells) {
    for (Cell c : cells)
        if (cells.contains({c.row - 1, c.col - 1})) return false;
    return true;
}

bool is_border_strip(const CellSet& cells) {
    return !cells.empty() && is_broken_border_strip(cells) &&
           components(cells).size() == 1;
}

namespace {
Cell unique_box(const CellSet& strip, bool first) {
    SCHURQ_CHECK(!strip.empty(), "first/last box of empty strip");
    std::vector<Cell> hits;
    for (Cell c : strip.sorted()) {
        bool hit = first ? !strip.contains({c.row - 1, c.col}) &&
                               !strip.contains({c.row, c.col + 1})
                         : !strip.contains({c.row + 1, c.col}) &&
                               !strip.contains({c.row, c.col - 1});
        if (hit) hits.push_back(c);
    }
    SCHURQ_CHECK(hits.size() == 1, "strip does not have a unique first/last box");
    return hits[0];
}
}  // namespace

Cell strip_first_box(const CellSet& strip) { return unique_box(strip, true); }
Cell strip_last_box(const CellSet& strip) { return unique_box(strip, false); }

Cell broken_strip_first_box(const CellSet& cells) {
    auto comps = components(cells);
    SCHURQ_CHECK(!comps.empty(), "first box of empty broken strip");
    return strip_first_box(comps.back());
}

Cell broken_strip_last_box(const CellSet& cells) {
    auto comps = components(cells);
    SCHURQ_CHECK(!comps.empty(), "last box of empty broken strip");
    return strip_last_box(comps.front());
}

}  // namespace schurq
