#include "schurq/amenability.hpp"

#include <algorithm>
#include <set>

#include "schurq/cells.hpp"

namespace schurq {

bool is_k_amenable(const Word& w, int k) {
    const int n = w.size();
    std::vector<int> mk = m_stats(w, k);
    std::vector<int> mk1 = m_stats(w, k - 1);
    for (int j = 0; j < n; ++j) {
        if (mk[j] == mk1[j]) {
            const Letter& l = w.letters[n - j - 1];  // w_{n-j}
            if (l.value() == k) return false;
        }
    }
    for (int j = n; j < 2 * n; ++j) {
        if (mk[j] == mk1[j]) {
            const Letter& l = w.letters[j - n];  // w_{j-n+1}
            if ((l.value() == k - 1 && !l.is_marked()) || (l.value() == k && l.is_marked())) {
                return false;
            }
        }
    }
    for (const Letter& l : w.letters) {
        if (l.value() == k) {
            if (l.is_marked()) return false;
            break;
        }
    }
    for (const Letter& l : w.letters) {
        if (l.value() == k - 1) {
            if (l.is_marked()) return false;
            break;
        }
    }
    return true;
}

bool is_amenable(const Word& w) {
    int maxv = 0;
    for (const Letter& l : w.letters) maxv = std::max(maxv, l.value());
    for (int k = 2; k <= maxv + 1; ++k) {
        if (!is_k_amenable(w, k)) return false;
    }
    return true;
}

bool is_amenable(const Tableau& t) { return is_amenable(reading_word(t)); }

bool is_fitting(const Tableau& t, int i) {
    CellSet band = t.band(i);
    if (band.empty()) return true;
    Cell last = broken_strip_last_box(band);
    Letter l = t.at(last);
    return !l.is_marked() && l.value() == i;
}

ChecklistContext checklist_context(const Tableau& t, int k) {
    ChecklistContext ctx;
    Content c = t.content();
    for (const Cell& cell : t.shape().cells()) {
        Letter l = t.at(cell);
        if (l == Letter::marked(k)) {
            auto nw = t.find({cell.row - 1, cell.col - 1});
            if (!(nw && *nw == Letter::marked(k - 1))) ctx.critical_marked.push_back(cell);
        } else if (l == Letter::marked(k - 1)) {
            auto se = t.find({cell.row + 1, cell.col + 1});
            if (!(se && *se == Letter::marked(k))) ctx.free_targets.push_back(cell);
        }
    }
    // Marked letters sit at most once per row, so sorting by row is total.
    std::sort(ctx.critical_marked.begin(), ctx.critical_marked.end(),
              [](Cell a, Cell b) { return a.row < b.row; });
    ctx.d = static_cast<int>(ctx.critical_marked.size()) + c.unmarked_count(k) -
            c.unmarked_count(k - 1) + 1;
    int take = std::max(0, std::min(ctx.d, static_cast<int>(ctx.critical_marked.size())));
    ctx.must_match.assign(ctx.critical_marked.begin(), ctx.critical_marked.begin() + take);
    return ctx;
}

int quadrant_unmarked_count(const Tableau& t, Cell corner, int value) {
    int count = 0;
    for (const Cell& cell : t.shape().cells()) {
        if (cell.row <= corner.row && cell.col >= corner.col &&
            t.at(cell) == Letter::unmarked(value)) {
            ++count;
        }
    }
    return count;
}

namespace {

// Kuhn's augmenting-path matching over an explicit adjacency list.
bool try_augment(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
                 std::vector<bool>& visited) {
    for (int v : adj[u]) {
        if (visited[v]) continue;
        visited[v] = true;
        if (match_right[v] < 0 || try_augment(match_right[v], adj, match_right, visited)) {
            match_right[v] = u;
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::pair<Cell, Cell>>> find_phi_matching(const Tableau& t, int k,
                                                                    const ChecklistContext& ctx) {
    // Rows holding an unmarked k-1 or a marked k block the gap between a
    // matched pair when they lie strictly between the two boxes.
    std::set<int> blocked;
    for (const Cell& cell : t.shape().cells()) {
        Letter l = t.at(cell);
        if (l == Letter::unmarked(k - 1) || l == Letter::marked(k)) blocked.insert(cell.row);
    }
    auto gap_free = [&](Cell source, Cell target) {
        if (target.row >= source.row) return true;
        auto it = blocked.upper_bound(target.row);
        return it == blocked.end() || *it >= source.row;
    };

    const int left = static_cast<int>(ctx.must_match.size());
    const int right = static_cast<int>(ctx.free_targets.size());
    std::vector<std::vector<int>> adj(left);
    for (int i = 0; i < left; ++i) {
        for (int j = 0; j < right; ++j) {
            if (gap_free(ctx.must_match[i], ctx.free_targets[j])) adj[i].push_back(j);
        }
    }
    std::vector<int> match_right(right, -1);
    for (int i = 0; i < left; ++i) {
        std::vector<bool> visited(right, false);
        if (!try_augment(i, adj, match_right, visited)) return std::nullopt;
    }
    std::vector<std::pair<Cell, Cell>> pairs;
    for (int j = 0; j < right; ++j) {
        if (match_right[j] >= 0) pairs.emplace_back(ctx.must_match[match_right[j]], ctx.free_targets[j]);
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first.row < b.first.row; });
    return pairs;
}

bool is_k_amenable_checklist(const Tableau& t, int k) {
    Content c = t.content();
    int ck = c.value_count(k);
    int ck1 = c.value_count(k - 1);
    if (ck == 0 && ck1 == 0) return true;
    if (c.unmarked_count(k - 1) <= c.unmarked_count(k)) return false;  // (1)
    ChecklistContext ctx = checklist_context(t, k);
    for (const Cell& cell : t.shape().cells()) {  // (2)
        if (t.at(cell) == Letter::unmarked(k) &&
            quadrant_unmarked_count(t, cell, k - 1) < quadrant_unmarked_count(t, cell, k)) {
            return false;
        }
    }
    for (const Cell& cell : ctx.critical_marked) {  // (3)
        if (quadrant_unmarked_count(t, cell, k - 1) <= quadrant_unmarked_count(t, cell, k)) {
            return false;
        }
    }
    if (ctx.d > 0 && !find_phi_matching(t, k, ctx)) return false;  // (4)
    if (!is_fitting(t, k - 1)) return false;                       // (5)
    if (ck > 0 && !is_fitting(t, k)) return false;                 // (6)
    return true;
}

bool is_amenable_checklist(const Tableau& t) {
    int maxv = t.content().length();
    for (int k = 2; k <= maxv + 1; ++k) {
        if (!is_k_amenable_checklist(t, k)) return false;
    }
    return true;
}

bool satisfies_sufficient(const Tableau& t) {
    Content c = t.content();
    int maxv = c.length();
    for (int k = 2; k <= maxv + 1; ++k) {
        if (c.value_count(k) == 0 && c.value_count(k - 1) == 0) continue;
        bool anchored = false;  // (1): some k-1 with no k below it in its column
        for (const Cell& cell : t.shape().cells()) {
            if (t.at(cell) != Letter::unmarked(k - 1)) continue;
            bool clean = true;
            for (const Cell& other : t.shape().cells()) {
                if (other.col == cell.col && other.row > cell.row &&
                    t.at(other) == Letter::unmarked(k)) {
                    clean = false;
                    break;
                }
            }
            if (clean) {
                anchored = true;
                break;
            }
        }
        if (!anchored) return false;
        for (const Cell& cell : t.shape().cells()) {
            Letter l = t.at(cell);
            if (l == Letter::unmarked(k)) {  // (2): k-1 above it in its column
                bool covered = false;
                for (const Cell& other : t.shape().cells()) {
                    if (other.col == cell.col && other.row < cell.row &&
                        t.at(other) == Letter::unmarked(k - 1)) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) return false;
            } else if (l == Letter::marked(k)) {  // (3): (k-1)' immediately up-left
                auto nw = t.find({cell.row - 1, cell.col - 1});
                if (!(nw && *nw == Letter::marked(k - 1))) return false;
            }
        }
        if (!is_fitting(t, k - 1)) return false;
        if (c.value_count(k) > 0 && !is_fitting(t, k)) return false;
    }
    return true;
}

}  // namespace schurq
