#include "schurq/classification.hpp"

#include <algorithm>

#include "schurq/amenability.hpp"
#include "schurq/canonical.hpp"
#include "schurq/errors.hpp"

namespace schurq {

std::string family_name(Family f) {
    switch (f) {
        case Family::I: return "i";
        case Family::II: return "ii";
        case Family::III: return "iii";
        case Family::IV: return "iv";
        case Family::V: return "v";
    }
    throw InternalError("unknown family");
}

namespace {

bool is_consecutive_run(const StrictPartition& lambda) {
    for (int i = 1; i <= lambda.length(); ++i) {
        if (lambda.part(i) != lambda.part(1) - (i - 1)) return false;
    }
    return lambda.length() > 0;
}

StrictPartition run_family_content(int p, int q, int r) {
    std::vector<int> parts;
    for (int v = p + q + r; v >= p + q; --v) parts.push_back(v);
    int stop = std::max(p - q, q - p + 2);
    for (int v = p + q - 2; v >= stop; v -= 2) parts.push_back(v);
    SCHURQ_CHECK(parts.back() == stop || stop == p + q, "content ladder misses its endpoint");
    return StrictPartition(parts);
}

std::optional<Homogeneous> match_family(const SkewShape& basic) {
    const StrictPartition& lambda = basic.outer();
    const StrictPartition& mu = basic.inner();
    if (mu.empty()) return Homogeneous{1, lambda, Family::I};

    if (is_staircase(lambda) && mu.length() <= lambda.length() - 2) {
        return Homogeneous{1, partition_difference(lambda, mu), Family::II};
    }

    // (r+2, r, r-1, ..., 1) / (r+1)
    if (mu.length() == 1 && lambda.length() >= 2 && lambda.part(1) == lambda.part(2) + 2 &&
        mu.part(1) == lambda.part(1) - 1) {
        int r = lambda.part(2);
        bool tail = lambda.length() == r + 1;
        for (int i = 2; tail && i <= lambda.length(); ++i) {
            if (lambda.part(i) != r - i + 2) tail = false;
        }
        if (tail) {
            std::vector<int> parts{r + 1};
            for (int v = r - 1; v >= 1; --v) parts.push_back(v);
            return Homogeneous{2, StrictPartition(parts), Family::V};
        }
    }

    // (p+q+r, ..., p) / (q, ..., 1)
    if (is_consecutive_run(lambda) && is_staircase(mu)) {
        int q = mu.length();
        int p = lambda.part(lambda.length());
        int r = lambda.length() - q - 1;
        if (r >= 0) {
            return Homogeneous{1, run_family_content(p, q, r), r >= 1 ? Family::III : Family::IV};
        }
    }
    return std::nullopt;
}

CellSet intersect(const CellSet& a, const CellSet& b) {
    CellSet out;
    for (const Cell& c : a) {
        if (b.contains(c)) out.insert(c);
    }
    return out;
}

Cell rightmost_of_lowermost(const CellSet& s) {
    SCHURQ_CHECK(!s.empty(), "empty cell set has no extremal box");
    Cell best = *s.begin();
    for (const Cell& c : s) {
        if (c.row > best.row || (c.row == best.row && c.col > best.col)) best = c;
    }
    return best;
}

Tableau verified(Tableau t) {
    SCHURQ_CHECK(t.is_valid(), "witness filling is not a valid tableau");
    SCHURQ_CHECK(is_amenable(t), "witness filling is not amenable");
    StrictPartition lead = lex_max_content(t.shape().cell_set());
    SCHURQ_CHECK(t.content().total != lead.parts(), "witness content is the lex-largest one");
    return t;
}

}  // namespace

std::optional<Tableau> witness_disconnected(const SkewShape& basic) {
    const SkewShape variants[2] = {basic, normalize_basic(orthogonal_transpose(basic))};
    for (const SkewShape& shape : variants) {
        CellSet cells = shape.cells();
        std::vector<CellSet> comps = components(cells);
        if (comps.size() < 2) continue;
        BandTableau canon = canonical_tableau(cells);
        const CellSet& first_band = canon.bands[0];

        if (comps.size() > 2) {
            // Turn the first-band tail of the second component into a 2: the
            // third component keeps the count of 1s ahead of the count of 2s.
            Cell box = rightmost_of_lowermost(intersect(comps[1], first_band));
            Tableau t = canon.tableau;
            t.set(box, Letter::unmarked(2));
            return verified(std::move(t));
        }

        const CellSet& second = comps[1];
        if (second.min_row() < second.max_row()) {
            // Two components, the right one spanning several rows: demote its
            // lowest first-band box to a 2 and re-seed a 1 right above it.
            Cell box = rightmost_of_lowermost(intersect(second, first_band));
            Tableau t = canon.tableau;
            t.set(box, Letter::unmarked(2));
            SCHURQ_CHECK(cells.contains({box.row - 1, box.col}),
                         "no box above the demoted one");
            t.set({box.row - 1, box.col}, Letter::unmarked(1));
            return verified(std::move(t));
        }

        int leftmost = cells.min_col();
        int leftmost_count = 0;
        for (const Cell& c : cells) {
            if (c.col == leftmost) ++leftmost_count;
        }
        if (leftmost_count >= 2) {
            // Shorten the first band at its diagonal end; the peeling of the
            // rest produces a second admissible content.
            Cell last = broken_strip_last_box(first_band);
            SCHURQ_CHECK(last.row == last.col, "first band does not end on the diagonal");
            CellSet trimmed = first_band;
            trimmed.erase(last);
            return verified(band_tableau_with_first(cells, trimmed).tableau);
        }

        int top_of_leftmost = cells.max_row();
        for (const Cell& c : cells) {
            if (c.col == leftmost) top_of_leftmost = std::min(top_of_leftmost, c.row);
        }
        if (comps[0].min_row() < top_of_leftmost) {
            // The left component rises above its leftmost column: drop the
            // right end of the first band's lowest row instead.
            Cell box = rightmost_of_lowermost(first_band);
            CellSet trimmed = first_band;
            trimmed.erase(box);
            return verified(band_tableau_with_first(cells, trimmed).tableau);
        }
    }
    return std::nullopt;
}

std::optional<Tableau> witness_connected(const SkewShape& basic) {
    CellSet cells = basic.cells();
    BandTableau canon = canonical_tableau(cells);
    for (int i = 2; i <= static_cast<int>(canon.bands.size()); ++i) {
        std::vector<CellSet> comps = components(canon.bands[i - 1]);
        if (comps.size() < 2) continue;
        int y = strip_first_box(comps[0]).col;
        int v = strip_last_box(comps[1]).col;
        SCHURQ_CHECK(v > y, "band components out of order");

        if (v >= y + 2) {
            // Wide gap: push one box of band i into the previous band's
            // column v-1 and rebalance the box above it.
            int s = 0;
            for (const Cell& c : canon.bands[i - 2]) {
                if (c.col == v - 1) s = std::max(s, c.row);
            }
            SCHURQ_CHECK(s > 0, "previous band misses the gap column");
            Tableau t = canon.tableau;
            SCHURQ_CHECK(cells.contains({s - 1, v - 1}), "no box above the gap column seat");
            t.set({s, v - 1}, Letter::unmarked(i));
            t.set({s - 1, v - 1}, Letter::unmarked(i - 1));
            return verified(std::move(t));
        }

        // Adjacent gap (v == y+1): shift column y of the band upward by one
        // seat and refill the vacated bottom seat from the next value.
        int s = 0;
        for (const Cell& c : canon.bands[i - 1]) {
            if (c.col == y) s = std::max(s, c.row);
        }
        SCHURQ_CHECK(s > 0, "band misses its own first-box column");
        int t_row = 0;
        for (const Cell& c : cells) {
            if (c.col == y && canon.tableau.at(c) == Letter::unmarked(i - 1)) t_row = c.row;
        }
        SCHURQ_CHECK(t_row > 0, "no unmarked seat of the previous value in the column");
        Tableau t = canon.tableau;
        for (int a = t_row - 1; a <= s - 1; ++a) {
            SCHURQ_CHECK(cells.contains({a, y}), "column shift leaves the shape");
            t.set({a, y}, canon.tableau.at({a + 1, y}));
        }
        bool next_below = i < static_cast<int>(canon.bands.size()) &&
                          canon.bands[i].contains({s + 1, y});
        t.set({s, y}, next_below ? Letter::marked(i + 1) : Letter::unmarked(i + 1));
        return verified(std::move(t));
    }
    return std::nullopt;
}

ClassificationResult classify(const SkewShape& shape) {
    ClassificationResult res{shape};
    if (!shape.is_valid()) {
        res.zero = true;
        return res;
    }
    res.normalized = normalize_basic(shape);
    if (auto hom = match_family(res.normalized)) {
        res.homogeneous = true;
        res.hom = hom;
        return res;
    }
    if (components(res.normalized.cells()).size() >= 2) {
        res.witness = witness_disconnected(res.normalized);
        SCHURQ_CHECK(res.witness.has_value(), "disconnected non-family shape lacks a witness");
    } else {
        res.witness = witness_connected(res.normalized);
    }
    return res;
}

StrictPartition staircase_reduce(const SkewShape& shape) {
    const StrictPartition& lambda = shape.outer();
    const StrictPartition& mu = shape.inner();
    if (!is_staircase(lambda) || lambda.empty()) {
        throw PreconditionViolated("outer partition is not a staircase");
    }
    if (mu.part(1) > lambda.part(1)) {
        throw PreconditionViolated("inner partition does not fit inside the staircase");
    }
    return partition_difference(lambda, mu);
}

}  // namespace schurq
