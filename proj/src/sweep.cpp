#include "schurq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "schurq/amenability.hpp"
#include "schurq/canonical.hpp"
#include "schurq/enumerate.hpp"
#include "schurq/errors.hpp"
#include "schurq/expansion.hpp"
#include "schurq/classification.hpp"

namespace schurq {

namespace {

// Bottom-up enumeration: pick the fully-filled bottom rows (a strict tail of
// the outer partition), then extend upward one skew row at a time. Row i gets
// mu_i in [mu_{i+1}+1, lambda_{i+1}+1] (no removable empty column) and at
// least one cell (no empty row), which characterizes basic shapes.
struct BasicShapeGenerator {
    int target = 0;
    int max_first = 0;
    std::vector<SkewShape>* out = nullptr;
    std::vector<int> lambda_rev;  // built bottom row first
    std::vector<int> mu_rev;

    bool first_ok(int part) const { return max_first <= 0 || part <= max_first; }

    void emit() {
        std::vector<int> lambda(lambda_rev.rbegin(), lambda_rev.rend());
        std::vector<int> mu(mu_rev.rbegin(), mu_rev.rend());
        SkewShape shape{StrictPartition(lambda), StrictPartition(mu)};
        SCHURQ_CHECK(is_basic(shape), "generator produced a non-basic shape");
        SCHURQ_CHECK(shape.cell_count() == target, "generator produced a wrong cell count");
        out->push_back(std::move(shape));
    }

    // Extend with skew rows until `remaining` rows carrying `cells` cells.
    void extend(int remaining, int cells) {
        if (remaining == 0) {
            if (cells == 0) emit();
            return;
        }
        int prev_lambda = lambda_rev.back();
        int prev_mu = mu_rev.empty() ? 0 : mu_rev.back();
        for (int mu_i = prev_mu + 1; mu_i <= prev_lambda + 1; ++mu_i) {
            int min_c = std::max(1, prev_lambda + 1 - mu_i);
            int max_c = cells - (remaining - 1);
            for (int c = min_c; c <= max_c; ++c) {
                if (remaining == 1 && c != cells) continue;
                int lambda_i = mu_i + c;
                if (!first_ok(lambda_i) && remaining == 1) continue;
                mu_rev.push_back(mu_i);
                lambda_rev.push_back(lambda_i);
                extend(remaining - 1, cells - c);
                lambda_rev.pop_back();
                mu_rev.pop_back();
            }
        }
    }

    // Choose the strict tail of full rows (bottom-most part first is the
    // smallest), then hand over to extend().
    void tail(int parts_left, int min_part, int cells_left, int skew_rows) {
        if (parts_left == 0) {
            if (skew_rows == 0) {
                if (cells_left == 0) emit();
            } else if (cells_left >= skew_rows) {
                extend(skew_rows, cells_left);
            }
            return;
        }
        for (int part = min_part; part <= cells_left - (parts_left - 1); ++part) {
            if (!first_ok(part) && parts_left == 1 && skew_rows == 0) continue;
            lambda_rev.push_back(part);
            tail(parts_left - 1, part + 1, cells_left - part, skew_rows);
            lambda_rev.pop_back();
        }
    }
};

template <typename Fn>
void run_parallel(size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    size_t width = std::min<size_t>(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(width);
    for (size_t t = 0; t < width; ++t) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Shared failure collector: keeps the lexicographically first message so
// parallel runs report deterministically.
struct Failures {
    std::mutex mu;
    std::string first;
    bool any = false;

    void add(const std::string& msg) {
        std::lock_guard<std::mutex> lock(mu);
        if (!any || msg < first) first = msg;
        any = true;
    }
    void finish(CheckResult& r) {
        r.ok = !any;
        r.detail = first;
    }
};

std::string poly_diff_note(const MonomialPoly& a, const MonomialPoly& b) {
    for (const auto& [expo, c] : a.terms) {
        auto it = b.terms.find(expo);
        long long other = it == b.terms.end() ? 0 : it->second;
        if (other != c) {
            std::ostringstream os;
            os << "coefficient " << c << " vs " << other << " at exponent";
            for (int e : expo) os << ' ' << e;
            return os.str();
        }
    }
    return "extra terms on the evaluated side";
}

}  // namespace

std::vector<SkewShape> basic_shapes_with_cells(int min_cells, int max_cells, int max_first) {
    std::vector<SkewShape> out;
    BasicShapeGenerator gen;
    gen.max_first = max_first;
    gen.out = &out;
    for (int n = std::max(1, min_cells); n <= max_cells; ++n) {
        gen.target = n;
        for (int rows = 1; rows <= n; ++rows) {
            for (int skew_rows = 0; skew_rows < rows; ++skew_rows) {
                int full_rows = rows - skew_rows;
                gen.tail(full_rows, 1, n, skew_rows);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SkewShape& a, const SkewShape& b) {
        if (a.outer() != b.outer()) return b.outer() < a.outer();
        return b.inner() < a.inner();
    });
    return out;
}

CheckResult check_monomial_identity(int max_cells, int max_first, int jobs) {
    CheckResult result{"monomial-identity"};
    std::vector<SkewShape> shapes = basic_shapes_with_cells(1, max_cells, max_first);
    Failures fails;
    std::atomic<long long> cases{0};

    std::mutex cache_mu;
    std::map<std::pair<std::vector<int>, int>, MonomialPoly> cache;
    auto q_poly = [&](const StrictPartition& nu, int vars) {
        std::pair<std::vector<int>, int> key{nu.parts(), vars};
        {
            std::lock_guard<std::mutex> lock(cache_mu);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        MonomialPoly poly = monomial_oracle(shifted_cells(nu), vars);
        std::lock_guard<std::mutex> lock(cache_mu);
        return cache.emplace(std::move(key), std::move(poly)).first->second;
    };

    run_parallel(shapes.size(), jobs, [&](size_t idx) {
        const SkewShape& shape = shapes[idx];
        try {
            int vars = static_cast<int>(shape.cell_count());
            MonomialPoly direct = monomial_oracle(shape.cells(), vars);
            MonomialPoly summed;
            summed.variables = vars;
            for (const auto& [nu, coeff] : expand(shape).terms) {
                for (const auto& [expo, c] : q_poly(nu, vars).terms) {
                    summed.terms[expo] += coeff * c;
                }
            }
            std::erase_if(summed.terms, [](const auto& kv) { return kv.second == 0; });
            if (!(direct == summed)) {
                fails.add(shape.str() + ": " + poly_diff_note(direct, summed));
            }
            ++cases;
        } catch (const std::exception& e) {
            fails.add(shape.str() + ": exception: " + e.what());
        }
    });
    result.cases = cases;
    fails.finish(result);
    return result;
}

namespace {

// Both the word conditions and the box-local checklist for a fixed k read
// only the letters of values k-1 and k; every clause skips everything else.
// The verdict of (T, k) therefore equals the verdict of T restricted to those
// two values, taken as a tableau of its own. Instead of enumerating full
// fillings (hopeless for shapes with many independent cells), enumerate the
// two-value sub-fillings that occur in SOME valid tableau with arbitrary
// values. A sub-filling is realizable exactly when
//  - the pair cells obey the usual local row/column rules,
//  - no other cell is squeezed from both sides: a cell right of or below a
//    pair letter must hold a value above k, one left of or above it a value
//    under k-1, and those demands propagate through other cells,
//  - the forced under-cells admit a valid filling with the k-2 values below
//    k-1. Values above k are unlimited, so over-cells never constrain
//    (strictly increasing distinct values fill any region).
// This quantifies over all tableaux with any values whatsoever, not just
// values up to max_k.
struct PairPatternSweep {
    std::vector<Cell> cells;             // row-major
    std::vector<int> left, up, right, down;
    std::unordered_map<std::uint64_t, int> palette_memo;  // low mask -> min values needed
    struct SubShape {
        std::shared_ptr<const ShapeIndex> index;
        std::vector<int> order;  // reading position -> row-major cell index
    };
    std::unordered_map<std::uint64_t, SubShape> shape_memo;  // pair mask -> sub-shape

    explicit PairPatternSweep(const CellSet& shape_cells) {
        cells = shape_cells.sorted();
        int n = static_cast<int>(cells.size());
        left.assign(n, -1);
        up.assign(n, -1);
        right.assign(n, -1);
        down.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            left[i] = index_of({cells[i].row, cells[i].col - 1});
            up[i] = index_of({cells[i].row - 1, cells[i].col});
            right[i] = index_of({cells[i].row, cells[i].col + 1});
            down[i] = index_of({cells[i].row + 1, cells[i].col});
        }
    }

    int index_of(Cell c) const {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        if (it == cells.end() || !(*it == c)) return -1;
        return static_cast<int>(it - cells.begin());
    }

    CellSet masked_cells(std::uint64_t mask) const {
        CellSet out;
        for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
            if (mask >> i & 1) out.insert(cells[i]);
        }
        return out;
    }

    // Fewest distinct values that validly fill the masked cells (monotone:
    // more values never hurt, and the cell count always suffices).
    int min_palette(std::uint64_t mask) {
        if (mask == 0) return 0;
        auto it = palette_memo.find(mask);
        if (it != palette_memo.end()) return it->second;
        CellSet region = masked_cells(mask);
        int v = 1;
        while (!TableauStream(region, v).next().has_value()) ++v;
        palette_memo.emplace(mask, v);
        return v;
    }

    const SubShape& sub_shape(std::uint64_t mask) {
        auto it = shape_memo.find(mask);
        if (it != shape_memo.end()) return it->second;
        SubShape sub;
        sub.index = std::make_shared<const ShapeIndex>(masked_cells(mask));
        for (const Cell& c : sub.index->cells()) sub.order.push_back(index_of(c));
        return shape_memo.emplace(mask, std::move(sub)).first->second;
    }

    // Visits every realizable sub-filling once for each k in [2, max_k] it is
    // realizable for, placed at the values {k-1, k}. cls encodes the pattern:
    // 0 = a value outside the pair; 1..4 = (k-1)', k-1, k', k.
    template <typename Verdict>
    void enumerate(int max_k, Verdict&& verdict) {
        int n = static_cast<int>(cells.size());
        std::vector<int> cls(n, -1);
        std::vector<int> state(n, 0);  // 0 free, 1 forced-under, 2 forced-over
        dfs(0, max_k, cls, state, std::forward<Verdict>(verdict));
    }

private:
    template <typename Verdict>
    void dfs(int pos, int max_k, std::vector<int>& cls, std::vector<int>& state,
             Verdict&& verdict) {
        int n = static_cast<int>(cells.size());
        if (pos == n) {
            finish(max_k, cls, state, verdict);
            return;
        }
        for (int c = 0; c <= 4; ++c) {
            if (!admissible(pos, c, cls)) continue;
            cls[pos] = c;
            dfs(pos + 1, max_k, cls, state, verdict);
        }
        cls[pos] = -1;
    }

    // Local rules between two assigned pair cells; rank order is exactly
    // (k-1)' < k-1 < k' < k, row repeats only unmarked (2, 4), column repeats
    // only marked (1, 3). Cells of class 0 impose nothing here.
    bool admissible(int pos, int c, const std::vector<int>& cls) const {
        if (c == 0) return true;
        int l = left[pos], u = up[pos];
        if (l >= 0 && cls[l] > 0) {
            if (cls[l] > c) return false;
            if (cls[l] == c && (c == 1 || c == 3)) return false;
        }
        if (u >= 0 && cls[u] > 0) {
            if (cls[u] > c) return false;
            if (cls[u] == c && (c == 2 || c == 4)) return false;
        }
        return true;
    }

    template <typename Verdict>
    void finish(int max_k, const std::vector<int>& cls, std::vector<int>& state,
                Verdict&& verdict) {
        int n = static_cast<int>(cells.size());
        // Over-cells: pushed above the pair by something on the left or top.
        std::uint64_t pair_mask = 0;
        for (int i = 0; i < n; ++i) {
            state[i] = 0;
            if (cls[i] != 0) {
                pair_mask |= std::uint64_t{1} << i;
                continue;
            }
            int l = left[i], u = up[i];
            if ((l >= 0 && (cls[l] > 0 || state[l] == 2)) ||
                (u >= 0 && (cls[u] > 0 || state[u] == 2))) {
                state[i] = 2;
            }
        }
        // Under-cells: pushed below the pair from the right or bottom. A cell
        // pushed both ways kills the pattern.
        std::uint64_t low_mask = 0;
        for (int i = n - 1; i >= 0; --i) {
            if (cls[i] != 0) continue;
            int r = right[i], d = down[i];
            if ((r >= 0 && (cls[r] > 0 || state[r] == 1)) ||
                (d >= 0 && (cls[d] > 0 || state[d] == 1))) {
                if (state[i] == 2) return;
                state[i] = 1;
                low_mask |= std::uint64_t{1} << i;
            }
        }
        // The pattern occurs in some tableau exactly for the k with enough
        // room below it: k - 2 values for the forced-under region.
        int first_k = min_palette(low_mask) + 2;
        if (first_k > max_k) return;
        const SubShape& sub = sub_shape(pair_mask);
        std::vector<Letter> letters(sub.order.size());
        for (int k = first_k; k <= max_k; ++k) {
            for (size_t p = 0; p < sub.order.size(); ++p) {
                int c = cls[sub.order[p]];
                int value = c <= 2 ? k - 1 : k;
                letters[p] = (c & 1) ? Letter::marked(value) : Letter::unmarked(value);
            }
            verdict(Tableau(sub.index, letters), k);
        }
    }
};

}  // namespace

CheckResult check_checklist_equivalence(int max_cells, int max_k, int jobs) {
    CheckResult result{"checklist-equivalence"};
    std::vector<SkewShape> shapes = basic_shapes_with_cells(1, max_cells, 0);
    Failures fails;
    std::atomic<long long> cases{0};
    run_parallel(shapes.size(), jobs, [&](size_t idx) {
        const SkewShape& shape = shapes[idx];
        try {
            long long local = 0;
            PairPatternSweep sweep(shape.cells());
            sweep.enumerate(max_k, [&](const Tableau& t, int k) {
                if (is_k_amenable(reading_word(t), k) != is_k_amenable_checklist(t, k)) {
                    fails.add(shape.str() + ": k=" + std::to_string(k) + "\n" + t.text());
                }
                ++local;
            });
            cases += local;
        } catch (const std::exception& e) {
            fails.add(shape.str() + ": exception: " + e.what());
        }
    });
    result.cases = cases;
    fails.finish(result);
    return result;
}

CheckResult check_classification_soundness(int max_cells, int jobs) {
    CheckResult result{"classification-soundness"};
    std::vector<SkewShape> shapes = basic_shapes_with_cells(1, max_cells, 0);
    Failures fails;
    std::atomic<long long> cases{0};
    run_parallel(shapes.size(), jobs, [&](size_t idx) {
        const SkewShape& shape = shapes[idx];
        try {
            QExpansion exp = expand(shape);
            ClassificationResult res = classify(shape);
            CellSet cells = shape.cells();

            // Leading term always matches the band data.
            StrictPartition lead = lex_max_content(cells);
            auto it = exp.terms.begin();
            if (it == exp.terms.end() || !(it->first == lead) ||
                it->second != leading_coefficient(cells)) {
                fails.add(shape.str() + ": leading term mismatch");
                return;
            }

            bool single = exp.terms.size() == 1;
            if (res.homogeneous != single) {
                fails.add(shape.str() + ": classify says " +
                          (res.homogeneous ? "homogeneous" : "inhomogeneous") + ", expansion has " +
                          std::to_string(exp.terms.size()) + " terms");
                return;
            }
            if (single) {
                if (!(res.hom && res.hom->nu == it->first && res.hom->coefficient == it->second)) {
                    fails.add(shape.str() + ": homogeneous data mismatch");
                }
            } else {
                bool shape_split = components(res.normalized.cells()).size() >= 2;
                bool band_split = false;
                for (const CellSet& band : canonical_tableau(res.normalized.cells()).bands) {
                    if (components(band).size() >= 2) band_split = true;
                }
                bool expect_witness = shape_split || band_split;
                if (expect_witness != res.witness.has_value()) {
                    fails.add(shape.str() + ": witness " +
                              (res.witness ? "present without" : "missing despite") +
                              " a split hypothesis");
                    return;
                }
                if (res.witness) {
                    const Tableau& w = *res.witness;
                    StrictPartition wlead = lex_max_content(w.shape().cell_set());
                    bool good = w.is_valid() && is_amenable(w) &&
                                w.content().total != wlead.parts();
                    StrictPartition content = w.content().to_strict_partition();
                    // The witness may live on the transposed shape; its
                    // content must index a term either way.
                    if (!exp.terms.count(content)) good = false;
                    if (!good) fails.add(shape.str() + ": witness fails verification");
                }
            }
            ++cases;
        } catch (const std::exception& e) {
            fails.add(shape.str() + ": exception: " + e.what());
        }
    });
    result.cases = cases;
    fails.finish(result);
    return result;
}

CheckResult check_symmetry(int max_weight) {
    CheckResult result{"coefficient-symmetry"};
    Failures fails;
    long long cases = 0;
    for (int n = 0; n <= max_weight && !fails.any; ++n) {
        for (const StrictPartition& lambda : strict_partitions_of(n)) {
            for (const StrictPartition& mu : strict_subpartitions(lambda)) {
                int rest = static_cast<int>(lambda.sum() - mu.sum());
                SkewShape left(lambda, mu);
                for (const StrictPartition& nu : strict_partitions_of(rest)) {
                    long long f1 = lr_coefficient(left, nu);
                    long long f2 =
                        lambda.contains(nu) ? lr_coefficient(SkewShape(lambda, nu), mu) : 0;
                    if (f1 != f2) {
                        fails.add(lambda.str() + "/" + mu.str() + " vs /" + nu.str() + ": " +
                                  std::to_string(f1) + " != " + std::to_string(f2));
                    }
                    ++cases;
                }
            }
        }
    }
    result.cases = cases;
    fails.finish(result);
    return result;
}

CheckResult check_row_strip_rule(int max_weight) {
    CheckResult result{"row-strip-rule"};
    Failures fails;
    long long cases = 0;
    for (int n = 1; n <= max_weight; ++n) {
        for (const StrictPartition& lambda : strict_partitions_of(n)) {
            for (int strip = 1; strip <= lambda.part(1); ++strip) {
                QExpansion fast = decompose_row_strip(lambda, strip);
                QExpansion brute = expand(SkewShape(lambda, StrictPartition({strip})));
                if (!(fast == brute)) {
                    fails.add(lambda.str() + " strip " + std::to_string(strip) + ": " +
                              to_string(fast) + " vs " + to_string(brute));
                    continue;
                }
                ++cases;
            }

            // strip = 1: corner removals, all coefficients 1.
            {
                QExpansion corners_exp;
                for (const StrictPartition& nu : corner_removals(lambda)) {
                    corners_exp.terms[nu] += 1;
                }
                if (!(corners_exp == decompose_row_strip(lambda, 1))) {
                    fails.add(lambda.str() + ": corner removals disagree");
                }
            }

            // strip = lambda_1 - 1: interior border boxes, coefficient 2
            // except at the two ends of the border strip.
            if (lambda.part(1) >= 2) {
                CellSet b = border(lambda);
                Cell first = strip_first_box(b);
                Cell last = strip_last_box(b);
                CellSet rest = shifted_cells(lambda).set_minus(b);
                QExpansion special;
                for (const Cell& c : b) {
                    if (b.contains({c.row - 1, c.col}) || b.contains({c.row, c.col - 1})) continue;
                    CellSet kept = rest;
                    kept.insert(c);
                    long long coeff = (c == first || c == last) ? 1 : 2;
                    special.terms[read_straight_shape(kept)] += coeff;
                }
                if (!(special == decompose_row_strip(lambda, lambda.part(1) - 1))) {
                    fails.add(lambda.str() + ": end-of-border rule disagrees");
                }
            }
        }
    }
    result.cases = cases;
    fails.finish(result);
    return result;
}

CheckResult check_ot_invariance(int max_cells, int max_value, int jobs) {
    CheckResult result{"transpose-invariance"};
    std::vector<SkewShape> shapes = basic_shapes_with_cells(1, max_cells, 0);
    Failures fails;
    std::atomic<long long> cases{0};
    run_parallel(shapes.size(), jobs, [&](size_t idx) {
        const SkewShape& shape = shapes[idx];
        try {
            SkewShape flipped = orthogonal_transpose(shape);
            if (!(expand(shape) == expand(flipped))) {
                fails.add(shape.str() + ": expansion changes under transpose");
                return;
            }
            CellSet target = orthogonal_transpose_cells(shape.cells());
            long long local = 0;
            for_each_tableau(shape.cells(), max_value, [&](const Tableau& t) {
                Tableau ft = lambda_flip(t);
                bool ok = ft.is_valid() && ft.shape().cell_set() == target;
                if (ok) {
                    std::vector<int> rev = t.content().total;
                    std::reverse(rev.begin(), rev.end());
                    while (!rev.empty() && rev.back() == 0) rev.pop_back();
                    ok = ft.content().total == rev;
                }
                if (!ok) fails.add(shape.str() + ": flip fails on\n" + t.text());
                ++local;
            });
            cases += local;
        } catch (const std::exception& e) {
            fails.add(shape.str() + ": exception: " + e.what());
        }
    });
    result.cases = cases;
    fails.finish(result);
    return result;
}

CheckResult check_amenable_content_strict(int max_cells, int max_first, int max_value, int jobs) {
    CheckResult result{"amenable-content-strict"};
    std::vector<SkewShape> shapes = basic_shapes_with_cells(1, max_cells, max_first);
    Failures fails;
    std::atomic<long long> cases{0};
    run_parallel(shapes.size(), jobs, [&](size_t idx) {
        const SkewShape& shape = shapes[idx];
        try {
            long long local = 0;
            for_each_tableau(shape.cells(), max_value, [&](const Tableau& t) {
                if (!is_amenable(t)) return;
                ++local;
                const std::vector<int>& c = t.content().total;
                for (size_t i = 0; i < c.size(); ++i) {
                    if (c[i] <= 0 || (i + 1 < c.size() && c[i] <= c[i + 1])) {
                        fails.add(shape.str() + ": non-strict amenable content on\n" + t.text());
                        return;
                    }
                }
            });
            cases += local;
        } catch (const std::exception& e) {
            fails.add(shape.str() + ": exception: " + e.what());
        }
    });
    result.cases = cases;
    fails.finish(result);
    return result;
}

std::vector<CheckResult> run_sweep(int max_cells, int jobs) {
    int weight = std::min(max_cells, 9);
    return {
        check_monomial_identity(max_cells, 0, jobs),
        check_checklist_equivalence(max_cells, 8, jobs),
        check_classification_soundness(max_cells, jobs),
        check_symmetry(std::min(max_cells, 8)),
        check_row_strip_rule(weight),
        check_ot_invariance(max_cells, 3, jobs),
        check_amenable_content_strict(max_cells, 0, 8, jobs),
    };
}

}  // namespace schurq
