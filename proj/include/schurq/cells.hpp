#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <unordered_set>
#include <vector>

namespace schurq {

// 1-indexed matrix coordinates: row grows downward, column grows rightward.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

struct CellHash {
    size_t operator()(const Cell& c) const {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.row)) << 32) |
            static_cast<std::uint32_t>(c.col));
    }
};

// Finite set of cells with O(1) expected membership. The universal currency
// for diagrams, bands and border strips.
class CellSet {
public:
    CellSet() = default;
    CellSet(std::initializer_list<Cell> cells);
    explicit CellSet(const std::vector<Cell>& cells);

    bool contains(Cell c) const { return cells_.count(c) > 0; }
    void insert(Cell c) { cells_.insert(c); }
    void erase(Cell c) { cells_.erase(c); }
    size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    // Row-major: row ascending, column ascending within a row.
    std::vector<Cell> sorted() const;
    // Reading-word order: bottom row first, left to right within a row.
    std::vector<Cell> reading_order() const;

    int min_row() const;
    int max_row() const;
    int min_col() const;
    int max_col() const;

    bool operator==(const CellSet& other) const { return cells_ == other.cells_; }

    CellSet set_minus(const CellSet& other) const;
    CellSet set_union(const CellSet& other) const;

private:
    std::unordered_set<Cell, CellHash> cells_;
};

// Edgewise-connected components, ordered by leftmost column. Component column
// spans never tie in the diagrams this library produces; a tie is an internal
// error rather than an arbitrary tie-break.
std::vector<CellSet> components(const CellSet& cells);

// Cells (x,y) with (x+1,y) and (x,y+1) both absent.
std::vector<Cell> corners(const CellSet& cells);

// A border strip is a connected cell set with no (x-1,y-1) pair; a broken
// border strip has such components. first_box: (x-1,y) and (x,y+1) absent.
// last_box: (x+1,y) and (x,y-1) absent. For a broken border strip the first
// box lives in the rightmost component, the last box in the leftmost one.
bool is_border_strip(const CellSet& cells);
bool is_broken_border_strip(const CellSet& cells);
Cell strip_first_box(const CellSet& strip);
Cell strip_last_box(const CellSet& strip);
Cell broken_strip_first_box(const CellSet& cells);
Cell broken_strip_last_box(const CellSet& cells);

}  // namespace schurq
