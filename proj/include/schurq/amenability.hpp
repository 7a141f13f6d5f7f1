#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schurq/tableau.hpp"

namespace schurq {

// Word-side conditions. A word is k-amenable when
//  (a) for 0 <= j < n:   m_k(j) = m_{k-1}(j)  =>  w_{n-j} not in {k, k'},
//  (b) for n <= j < 2n:  m_k(j) = m_{k-1}(j)  =>  w_{j-n+1} not in {k-1, k'},
//  (c) the first letter of w with value k, if any, is unmarked,
//  (d) the first letter of w with value k-1, if any, is unmarked.
bool is_k_amenable(const Word& w, int k);
bool is_amenable(const Word& w);
// k-amenable for every k >= 2 (values above max+1 hold vacuously).
bool is_amenable(const Tableau& t);

// The i-th band T^(i) is fitting when it is empty or the last box of its
// leftmost component holds the unmarked letter i.
bool is_fitting(const Tableau& t, int i);

// Box-local criterion data for one k. S-counts refer to the quadrant
// S(x,y) = {(u,v) in D : u <= x, v >= y} restricted to unmarked letters.
struct ChecklistContext {
    std::vector<Cell> critical_marked;      // k' without (k-1)' up-left, top row first
    std::vector<Cell> free_targets;         // (k-1)' without k' down-right
    int d = 0;                              // |critical_marked| + c^u_k - c^u_{k-1} + 1
    std::vector<Cell> must_match;           // first max(d,0) of critical_marked
};

ChecklistContext checklist_context(const Tableau& t, int k);

int quadrant_unmarked_count(const Tableau& t, Cell corner, int value);

// Injective assignment must_match -> free_targets such that for each pair
// ((x,y) -> (u,v)) no row strictly between u and x contains a letter in
// {k-1, k'}. std::nullopt when no such assignment exists.
std::optional<std::vector<std::pair<Cell, Cell>>> find_phi_matching(const Tableau& t, int k,
                                                                    const ChecklistContext& ctx);

// Box-local equivalent of word k-amenability:
//  either c_{k-1} = c_k = 0, or all of
//  (1) c^u_{k-1} > c^u_k,
//  (2) every box holding k has quadrant counts S^{(k-1)} >= S^{(k)},
//  (3) strict inequality in (2) for boxes in critical_marked,
//  (4) d > 0 implies a phi matching exists,
//  (5) T^(k-1) is fitting,
//  (6) c_k > 0 implies T^(k) is fitting.
bool is_k_amenable_checklist(const Tableau& t, int k);
bool is_amenable_checklist(const Tableau& t);

// One-way sufficient test: for every k with c_{k-1} + c_k > 0,
//  (1) some box holds k-1 with no k below it in its column,
//  (2) every box holding k has a k-1 above it in its column,
//  (3) every box holding k' has (k-1)' immediately up-left,
//  (4) T^(k-1) is fitting,
//  (5) c_k > 0 implies T^(k) is fitting.
bool satisfies_sufficient(const Tableau& t);

}  // namespace schurq
