#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schurq/cells.hpp"
#include "schurq/errors.hpp"
#include "schurq/partition.hpp"

namespace schurq {

// A letter of the marked alphabet 1' < 1 < 2' < 2 < ... encoded as
// 2*value - 1 (marked) or 2*value (unmarked), so integer order is letter order.
class Letter {
public:
    Letter() = default;
    static Letter marked(int value) { return Letter(2 * value - 1); }
    static Letter unmarked(int value) { return Letter(2 * value); }
    static Letter from_code(int code);

    int code() const { return code_; }
    int value() const { return (code_ + 1) / 2; }
    bool is_marked() const { return (code_ & 1) != 0; }
    std::string str() const;
    static Letter parse(const std::string& token);

    auto operator<=>(const Letter&) const = default;

private:
    explicit Letter(int code) : code_(code) {}
    int code_ = 0;
};

// Letter multiplicities by value; trailing zero counts are trimmed everywhere.
struct Content {
    std::vector<int> total;
    std::vector<int> unmarked;
    std::vector<int> marked;

    int value_count(int v) const;
    int unmarked_count(int v) const;
    int length() const { return static_cast<int>(total.size()); }
    // Strictly decreasing positive totals; InternalError otherwise.
    StrictPartition to_strict_partition() const;
    bool operator==(const Content& other) const { return total == other.total; }
};

// Immutable indexed view of a cell set: cells in reading-word order plus
// constant-time neighbor lookups. Shared between tableaux of one shape.
class ShapeIndex {
public:
    explicit ShapeIndex(const CellSet& cells);

    int size() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }
    const CellSet& cell_set() const { return set_; }
    bool contains(Cell c) const { return set_.contains(c); }
    // -1 when the cell is not part of the shape.
    int index_of(Cell c) const;
    int left_of(int pos) const { return left_[pos]; }
    int below_of(int pos) const { return below_[pos]; }

private:
    CellSet set_;
    std::vector<Cell> cells_;
    std::vector<int> left_;
    std::vector<int> below_;
};

// A filling of a shape with letters, stored in reading-word order.
class Tableau {
public:
    Tableau(std::shared_ptr<const ShapeIndex> shape, std::vector<Letter> letters);
    static Tableau from_entries(const CellSet& cells,
                                const std::vector<std::pair<Cell, Letter>>& entries);

    const ShapeIndex& shape() const { return *shape_; }
    std::shared_ptr<const ShapeIndex> shape_ptr() const { return shape_; }
    int size() const { return shape_->size(); }
    Letter at(Cell c) const;
    Letter at_pos(int pos) const { return letters_[pos]; }
    std::optional<Letter> find(Cell c) const;
    void set(Cell c, Letter l);

    // Rows and columns weakly increase, at most one unmarked k per column,
    // at most one marked k' per row.
    bool is_valid() const;
    Content content() const;
    // Cells holding value i (marked or unmarked): the i-th band.
    CellSet band(int i) const;

    // One row per line, '.' for cells outside the shape, marked letters as 3'.
    std::string text() const;
    static Tableau parse_text(const std::string& text);

    bool operator==(const Tableau& other) const;

private:
    std::shared_ptr<const ShapeIndex> shape_;
    std::vector<Letter> letters_;
};

// Reading word: rows left to right, bottom row first; boxes track positions.
struct Word {
    std::vector<Letter> letters;
    std::vector<Cell> boxes;
    int size() const { return static_cast<int>(letters.size()); }
};

Word reading_word(const Tableau& t);

// m_i(j) for 0 <= j <= 2n: unmarked i among the last j letters for j <= n,
// then cumulatively marked i' among the first j-n letters.
std::vector<int> m_stats(const Word& w, int i);

}  // namespace schurq
