#pragma once

#include <string>
#include <vector>

#include "schurq/shapes.hpp"

namespace schurq {

struct CheckResult {
    std::string name;
    bool ok = true;
    long long cases = 0;
    std::string detail;  // first failure, empty when ok
};

// Every basic skew shape with a cell count in [min_cells, max_cells], each
// exactly once. A positive max_first additionally caps the first outer part.
std::vector<SkewShape> basic_shapes_with_cells(int min_cells, int max_cells, int max_first = 0);

// Identity check: the monomial expansion of the shape's Q-function equals the
// coefficient-weighted sum of the monomial expansions of its Q_nu terms, in
// as many variables as the shape has cells.
CheckResult check_monomial_identity(int max_cells, int max_first, int jobs);

// Box-local criterion agrees with the word conditions for every valid filling
// whatsoever (values unbounded) and every 2 <= k <= max_k: both sides depend
// only on the letters of values k-1 and k, so the check enumerates the
// realizable two-value sub-fillings instead of whole tableaux.
CheckResult check_checklist_equivalence(int max_cells, int max_k, int jobs);

// classify() agrees with single-term-ness of expand(), including coefficient
// and index; leading terms match the band data; witnesses verify and are
// present exactly when a disconnected shape or band provides one.
CheckResult check_classification_soundness(int max_cells, int jobs);

// f^lambda_{mu nu} = f^lambda_{nu mu} for every strict lambda of weight up to
// max_weight, every contained mu, and every strict nu of the complement size
// (zero on both sides when nu does not fit).
CheckResult check_symmetry(int max_weight);

// decompose_row_strip equals the generic expansion of lambda/(n) for every
// 1 <= n <= lambda_1, the n=1 case matches corner removals, and the
// n=lambda_1-1 case matches the interior-border-box coefficient rule.
CheckResult check_row_strip_rule(int max_weight);

// Expansions are invariant under the orthogonal transpose, and lambda_flip
// yields valid fillings of the transposed shape with reversed content.
CheckResult check_ot_invariance(int max_cells, int max_value, int jobs);

// Every amenable filling (values up to max_value) has strictly decreasing,
// positive content.
CheckResult check_amenable_content_strict(int max_cells, int max_first, int max_value, int jobs);

// All checks with one uniform size bound; used by the command-line sweep.
std::vector<CheckResult> run_sweep(int max_cells, int jobs);

}  // namespace schurq
