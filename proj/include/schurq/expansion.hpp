#pragma once

#include <map>
#include <string>

#include "schurq/shapes.hpp"
#include "schurq/tableau.hpp"

namespace schurq {

// A finite integer combination of Q_nu, iterated in lex-descending order of
// the indexing strict partitions. `zero` marks the expansion of an invalid
// shape (inner partition not contained in the outer one).
struct QExpansion {
    bool zero = false;
    std::map<StrictPartition, long long, std::greater<StrictPartition>> terms;

    bool operator==(const QExpansion& other) const {
        return zero == other.zero && terms == other.terms;
    }
};

// Number of amenable fillings of the shape with content nu. The shape must be
// valid and |nu| must equal the cell count (SizeMismatch otherwise).
long long lr_coefficient(const SkewShape& shape, const StrictPartition& nu);

// Full expansion of Q_{lambda/mu} in the basis {Q_nu}. Invalid shapes give
// zero; the empty shape gives the single term 1 * Q_{()}.
QExpansion expand(const SkewShape& shape);

// A polynomial in x_1..x_variables, exponent vector -> coefficient.
struct MonomialPoly {
    int variables = 0;
    std::map<std::vector<int>, long long> terms;

    bool operator==(const MonomialPoly& other) const = default;
};

// Sum of x^content(T) over all valid fillings with values up to `variables`:
// the shape's Q-function restricted to finitely many variables, computed
// without any reference to amenability or the basis expansion.
MonomialPoly monomial_oracle(const CellSet& cells, int variables);
MonomialPoly monomial_oracle(const SkewShape& shape, int variables);

// Evaluates an expansion as a polynomial by expanding each Q_nu monomially.
MonomialPoly evaluate_expansion(const QExpansion& expansion, int variables);

// Closed form for the expansion of Q_{lambda/(n)}, read off the border of
// lambda: sum of 2^(components-1) Q_nu over the straight shapes nu obtained by
// deleting n border cells. Requires 1 <= n <= lambda_1.
QExpansion decompose_row_strip(const StrictPartition& lambda, int n);

// Content-reversing bijection on fillings of a shape: transports T to the
// orthogonal transpose of its shape, band by band, reversing the value window.
Tableau lambda_flip(const Tableau& t);

std::string to_string(const QExpansion& e);

}  // namespace schurq
