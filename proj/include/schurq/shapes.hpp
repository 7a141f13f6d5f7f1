#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurq/cells.hpp"
#include "schurq/partition.hpp"

namespace schurq {

// Shifted diagram of a strict partition: row i holds columns i .. i+lambda_i-1.
CellSet shifted_cells(const StrictPartition& lambda);

// A skew shifted shape lambda/mu. Construction does not require containment;
// a shape whose inner diagram is not contained in the outer one is "invalid"
// and its Q-function is 0 by convention.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(StrictPartition outer, StrictPartition inner);

    static SkewShape parse(const std::string& literal);  // "6,5,2,1/4,3" or "6,5,2,1"
    std::string str() const;  // bare outer literal when inner is empty

    const StrictPartition& outer() const { return outer_; }
    const StrictPartition& inner() const { return inner_; }

    // Containment of the shifted diagrams (equivalent to componentwise parts).
    bool is_valid() const;
    // Cells of outer minus cells of inner; InvalidShape when not valid.
    CellSet cells() const;
    long long cell_count() const;

    bool operator==(const SkewShape&) const = default;

private:
    StrictPartition outer_;
    StrictPartition inner_;
};

// Reads a cell arrangement back as a skew shifted shape, choosing values for
// fully skewed (empty) rows greedily. nullopt when no outer/inner pair exists.
std::optional<SkewShape> read_skew_shape(const CellSet& cells);

// Reads a cell arrangement as a straight shifted diagram D_alpha.
// NotRealizable when the cells are not exactly such a diagram.
StrictPartition read_straight_shape(const CellSet& cells);

// No empty rows or columns: containment, len(outer) > len(inner),
// outer_i > inner_i and outer_{i+1} >= inner_i - 1 for all i <= len(inner).
// The empty shape and any shape with empty inner are basic.
bool is_basic(const SkewShape& shape);

// Removes removable empty columns (left to right) then removable empty rows
// (top to bottom) until the fixpoint, which is the unique basic shape with the
// same Q-function. Column removal shifts everything right of the column one
// step left; row removal shifts everything below the row one step up and then
// the whole diagram one step left. A removal only applies when the result is
// again a skew shifted arrangement.
SkewShape normalize_basic(const SkewShape& shape);

// Border of a straight shape: cells (x,y) of D_lambda with (x+1,y+1) outside.
CellSet border(const StrictPartition& lambda);

// All skew shapes lambda/nu whose cells lie inside border(lambda) and have
// exactly n cells (the set B_lambda^(n)).
std::vector<SkewShape> border_substrips(const StrictPartition& lambda, int n);

// Strict partitions obtained by removing one corner cell of D_lambda.
std::vector<StrictPartition> corner_removals(const StrictPartition& lambda);

// Reflection along the antidiagonal {(z,-z)} followed by the normalizing
// translation: top box row becomes row 1 and the lowermost box of the leftmost
// column lands on the main diagonal.
struct OrthogonalMap {
    int dr = 0;
    int dc = 0;
    Cell operator()(Cell c) const { return {dr - c.col, dc - c.row}; }
};
OrthogonalMap orthogonal_transpose_map(const CellSet& cells);
CellSet orthogonal_transpose_cells(const CellSet& cells);
SkewShape orthogonal_transpose(const SkewShape& shape);

}  // namespace schurq
