#include "schurq/canonical.hpp"

#include <utility>

#include "schurq/errors.hpp"

namespace schurq {

namespace {

std::vector<CellSet> peel_bands(CellSet remaining, std::vector<CellSet> bands) {
    while (!remaining.empty()) {
        CellSet band;
        for (const Cell& c : remaining) {
            if (!remaining.contains({c.row - 1, c.col - 1})) band.insert(c);
        }
        SCHURQ_CHECK(!band.empty(), "band peeling stalled");
        remaining = remaining.set_minus(band);
        bands.push_back(std::move(band));
    }
    return bands;
}

BandTableau assemble(const CellSet& cells, std::vector<CellSet> bands) {
    std::vector<std::pair<Cell, Letter>> entries;
    entries.reserve(cells.size());
    for (int i = 0; i < static_cast<int>(bands.size()); ++i) {
        for (const Cell& c : bands[i]) {
            bool marked = bands[i].contains({c.row + 1, c.col});
            entries.emplace_back(c, marked ? Letter::marked(i + 1) : Letter::unmarked(i + 1));
        }
    }
    return BandTableau{Tableau::from_entries(cells, entries), std::move(bands)};
}

}  // namespace

BandTableau canonical_tableau(const CellSet& cells) {
    return assemble(cells, peel_bands(cells, {}));
}

BandTableau canonical_tableau(const SkewShape& shape) { return canonical_tableau(shape.cells()); }

BandTableau band_tableau_with_first(const CellSet& cells, const CellSet& first_band) {
    for (const Cell& c : first_band) {
        SCHURQ_CHECK(cells.contains(c), "prescribed first band leaves the shape");
    }
    return assemble(cells, peel_bands(cells.set_minus(first_band), {first_band}));
}

StrictPartition lex_max_content(const CellSet& cells) {
    std::vector<int> sizes;
    for (const CellSet& band : peel_bands(cells, {})) {
        sizes.push_back(static_cast<int>(band.size()));
    }
    try {
        return StrictPartition(sizes);
    } catch (const InvalidPartition&) {
        throw InternalError("band sizes are not strictly decreasing");
    }
}

StrictPartition lex_max_content(const SkewShape& shape) { return lex_max_content(shape.cells()); }

long long leading_coefficient(const CellSet& cells) {
    long long coeff = 1;
    int exponent = 0;
    for (const CellSet& band : peel_bands(cells, {})) {
        exponent += static_cast<int>(components(band).size()) - 1;
    }
    SCHURQ_CHECK(exponent < 62, "leading coefficient overflows");
    return coeff << exponent;
}

}  // namespace schurq
