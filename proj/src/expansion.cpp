#include "schurq/expansion.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include "schurq/amenability.hpp"
#include "schurq/canonical.hpp"
#include "schurq/enumerate.hpp"
#include "schurq/errors.hpp"

namespace schurq {

long long lr_coefficient(const SkewShape& shape, const StrictPartition& nu) {
    if (!shape.is_valid()) throw InvalidShape("cannot count fillings of an invalid shape");
    CellSet cells = shape.cells();
    if (nu.sum() != static_cast<long long>(cells.size())) {
        throw SizeMismatch("content size " + std::to_string(nu.sum()) +
                           " does not match cell count " + std::to_string(cells.size()));
    }
    std::vector<int> caps = nu.parts();
    long long count = 0;
    for_each_tableau_with_content(cells, caps, [&](const Tableau& t) {
        if (is_amenable(t)) ++count;
    });
    return count;
}

QExpansion expand(const SkewShape& shape) {
    QExpansion out;
    if (!shape.is_valid()) {
        out.zero = true;
        return out;
    }
    SkewShape basic = normalize_basic(shape);
    CellSet cells = basic.cells();
    if (cells.empty()) {
        out.terms[StrictPartition()] = 1;
        return out;
    }
    StrictPartition bound = lex_max_content(cells);
    for (const StrictPartition& nu : strict_partitions_of(static_cast<int>(cells.size()))) {
        if (bound < nu) continue;
        long long f = lr_coefficient(basic, nu);
        if (f != 0) out.terms[nu] = f;
    }
    return out;
}

MonomialPoly monomial_oracle(const CellSet& cells, int variables) {
    MonomialPoly poly;
    poly.variables = variables;
    // Fast path: exponents fit in a nibble each, so a monomial packs into one
    // 64-bit key and the fillings can be consumed as raw code vectors. This is
    // the inner loop of the brute-force identity checks.
    if (variables <= 16 && cells.size() <= 15) {
        detail::TableauEnumerator e(std::make_shared<const ShapeIndex>(cells), variables);
        std::unordered_map<std::uint64_t, long long> packed;
        while (e.advance()) {
            std::uint64_t key = 0;
            for (int c : e.codes()) key += std::uint64_t{1} << (((c + 1) / 2 - 1) * 4);
            ++packed[key];
        }
        for (const auto& [key, count] : packed) {
            std::vector<int> expo(variables, 0);
            for (int v = 0; v < variables; ++v) expo[v] = static_cast<int>(key >> (v * 4) & 0xf);
            poly.terms.emplace(std::move(expo), count);
        }
        return poly;
    }
    for_each_tableau(cells, variables, [&](const Tableau& t) {
        std::vector<int> expo(variables, 0);
        for (int p = 0; p < t.size(); ++p) ++expo[t.at_pos(p).value() - 1];
        ++poly.terms[expo];
    });
    return poly;
}

MonomialPoly monomial_oracle(const SkewShape& shape, int variables) {
    MonomialPoly poly;
    poly.variables = variables;
    if (!shape.is_valid()) return poly;
    return monomial_oracle(shape.cells(), variables);
}

MonomialPoly evaluate_expansion(const QExpansion& expansion, int variables) {
    MonomialPoly out;
    out.variables = variables;
    if (expansion.zero) return out;
    for (const auto& [nu, coeff] : expansion.terms) {
        MonomialPoly q = monomial_oracle(shifted_cells(nu), variables);
        for (const auto& [expo, c] : q.terms) out.terms[expo] += coeff * c;
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

QExpansion decompose_row_strip(const StrictPartition& lambda, int n) {
    if (n < 1 || n > lambda.part(1)) {
        throw OutOfRange("strip size " + std::to_string(n) + " not in 1.." +
                         std::to_string(lambda.part(1)));
    }
    QExpansion out;
    for (const SkewShape& shape : border_substrips(lambda, n)) {
        int comps = static_cast<int>(components(shape.cells()).size());
        out.terms[shape.inner()] += 1LL << (comps - 1);
    }
    return out;
}

Tableau lambda_flip(const Tableau& t) {
    const CellSet& cells = t.shape().cell_set();
    if (cells.empty()) return t;
    OrthogonalMap map = orthogonal_transpose_map(cells);
    CellSet flipped_cells = orthogonal_transpose_cells(cells);
    const int top = t.content().length();

    std::vector<std::pair<Cell, Letter>> entries;
    entries.reserve(cells.size());
    for (int i = 1; i <= top; ++i) {
        CellSet src = t.band(i);
        if (src.empty()) continue;
        CellSet refl;
        for (const Cell& c : src) refl.insert(map(c));
        // Special boxes of the reflected band: neither a band box below nor
        // one to the left. They are exactly the last boxes of its components,
        // one per component, in left-to-right order.
        std::vector<Cell> specials;
        for (const Cell& q : refl.sorted()) {
            if (!refl.contains({q.row + 1, q.col}) && !refl.contains({q.row, q.col - 1})) {
                specials.push_back(q);
            }
        }
        std::sort(specials.begin(), specials.end(), [](Cell a, Cell b) { return a.col < b.col; });
        std::vector<CellSet> comps = components(src);
        SCHURQ_CHECK(specials.size() == comps.size(),
                     "special box count differs from component count");
        const int value = top - i + 1;
        for (const Cell& q : refl) {
            Letter letter = Letter::unmarked(value);
            if (refl.contains({q.row + 1, q.col})) {
                letter = Letter::marked(value);
            } else if (refl.contains({q.row, q.col - 1})) {
                letter = Letter::unmarked(value);
            } else {
                auto it = std::find(specials.begin(), specials.end(), q);
                SCHURQ_CHECK(it != specials.end(), "special box lookup failed");
                int k = static_cast<int>(it - specials.begin());
                Letter original = t.at(strip_last_box(comps[k]));
                letter = original.is_marked() ? Letter::marked(value) : Letter::unmarked(value);
            }
            entries.emplace_back(q, letter);
        }
    }
    return Tableau::from_entries(flipped_cells, entries);
}

std::string to_string(const QExpansion& e) {
    if (e.zero || e.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [nu, coeff] : e.terms) {
        if (!first) out << " + ";
        first = false;
        if (nu.empty()) {
            out << coeff;  // Q of the empty partition is 1
            continue;
        }
        if (coeff != 1) out << coeff << "*";
        out << "Q[";
        const auto& parts = nu.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out << ",";
            out << parts[i];
        }
        out << "]";
    }
    return out.str();
}

}  // namespace schurq
