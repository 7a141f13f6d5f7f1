#pragma once

#include <vector>

#include "schurq/shapes.hpp"
#include "schurq/tableau.hpp"

namespace schurq {

struct BandTableau {
    Tableau tableau;
    std::vector<CellSet> bands;  // bands[i] holds value i+1
};

// Peels the shape into bands: band k is the set of remaining cells with no
// remaining cell up-left of them. A cell gets k' when the cell directly below
// belongs to the same band, k otherwise. This filling is valid, amenable, and
// realizes the lexicographically largest content of the shape.
BandTableau canonical_tableau(const CellSet& cells);
BandTableau canonical_tableau(const SkewShape& shape);

// Same peeling but with a prescribed first band (a subset of the cells whose
// removal leaves a peelable rest). Used to build non-canonical fillings.
BandTableau band_tableau_with_first(const CellSet& cells, const CellSet& first_band);

// Band sizes of the canonical filling, as a strict partition.
StrictPartition lex_max_content(const CellSet& cells);
StrictPartition lex_max_content(const SkewShape& shape);

// Product over bands of 2^(components - 1): the coefficient of the
// lex-largest term in the expansion of the shape.
long long leading_coefficient(const CellSet& cells);

}  // namespace schurq
