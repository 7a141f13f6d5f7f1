#include "schurq/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace schurq {

Letter Letter::from_code(int code) {
    if (code < 1) throw OutOfRange("letter code must be positive, got " + std::to_string(code));
    return Letter(code);
}

std::string Letter::str() const {
    std::string s = std::to_string(value());
    if (is_marked()) s += '\'';
    return s;
}

Letter Letter::parse(const std::string& token) {
    bool marked = !token.empty() && token.back() == '\'';
    std::string digits = marked ? token.substr(0, token.size() - 1) : token;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("bad letter token '" + token + "'");
    }
    int v = std::stoi(digits);
    if (v < 1) throw ParseError("letter value must be positive in '" + token + "'");
    return marked ? Letter::marked(v) : Letter::unmarked(v);
}

int Content::value_count(int v) const {
    return (v >= 1 && v <= length()) ? total[v - 1] : 0;
}

int Content::unmarked_count(int v) const {
    return (v >= 1 && v <= length()) ? unmarked[v - 1] : 0;
}

StrictPartition Content::to_strict_partition() const {
    try {
        return StrictPartition(total);
    } catch (const InvalidPartition&) {
        throw InternalError("content is not a strict partition");
    }
}

ShapeIndex::ShapeIndex(const CellSet& cells) : set_(cells), cells_(cells.reading_order()) {
    left_.resize(cells_.size());
    below_.resize(cells_.size());
    std::unordered_map<Cell, int, CellHash> pos;
    pos.reserve(cells_.size());
    for (int i = 0; i < static_cast<int>(cells_.size()); ++i) pos[cells_[i]] = i;
    auto lookup = [&](Cell c) {
        auto it = pos.find(c);
        return it == pos.end() ? -1 : it->second;
    };
    for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
        Cell c = cells_[i];
        left_[i] = lookup({c.row, c.col - 1});
        below_[i] = lookup({c.row + 1, c.col});
    }
}

int ShapeIndex::index_of(Cell c) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), c, [](Cell a, Cell b) {
        if (a.row != b.row) return a.row > b.row;
        return a.col < b.col;
    });
    if (it == cells_.end() || !(*it == c)) return -1;
    return static_cast<int>(it - cells_.begin());
}

Tableau::Tableau(std::shared_ptr<const ShapeIndex> shape, std::vector<Letter> letters)
    : shape_(std::move(shape)), letters_(std::move(letters)) {
    if (static_cast<int>(letters_.size()) != shape_->size()) {
        throw SizeMismatch("tableau letter count does not match shape size");
    }
}

Tableau Tableau::from_entries(const CellSet& cells,
                              const std::vector<std::pair<Cell, Letter>>& entries) {
    auto idx = std::make_shared<const ShapeIndex>(cells);
    if (static_cast<int>(entries.size()) != idx->size()) {
        throw SizeMismatch("entry count does not match shape size");
    }
    std::vector<Letter> letters(entries.size(), Letter::unmarked(1));
    std::vector<bool> seen(entries.size(), false);
    for (const auto& [cell, letter] : entries) {
        int p = idx->index_of(cell);
        if (p < 0) throw OutOfRange("entry cell is outside the shape");
        if (seen[p]) throw PreconditionViolated("duplicate entry for one cell");
        seen[p] = true;
        letters[p] = letter;
    }
    return Tableau(std::move(idx), std::move(letters));
}

Letter Tableau::at(Cell c) const {
    int p = shape_->index_of(c);
    if (p < 0) throw OutOfRange("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                ") is outside the shape");
    return letters_[p];
}

std::optional<Letter> Tableau::find(Cell c) const {
    int p = shape_->index_of(c);
    if (p < 0) return std::nullopt;
    return letters_[p];
}

void Tableau::set(Cell c, Letter l) {
    int p = shape_->index_of(c);
    if (p < 0) throw OutOfRange("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                ") is outside the shape");
    letters_[p] = l;
}

bool Tableau::is_valid() const {
    for (int i = 0; i < size(); ++i) {
        Letter cur = letters_[i];
        int left = shape_->left_of(i);
        if (left >= 0) {
            Letter lc = letters_[left];
            if (cur < lc) return false;
            if (cur == lc && cur.is_marked()) return false;  // one marked per row
        }
        int below = shape_->below_of(i);
        if (below >= 0) {
            Letter bc = letters_[below];
            if (bc < cur) return false;
            if (cur == bc && !cur.is_marked()) return false;  // one unmarked per column
        }
    }
    return true;
}

Content Tableau::content() const {
    int maxv = 0;
    for (const Letter& l : letters_) maxv = std::max(maxv, l.value());
    Content c;
    c.total.assign(maxv, 0);
    c.unmarked.assign(maxv, 0);
    c.marked.assign(maxv, 0);
    for (const Letter& l : letters_) {
        ++c.total[l.value() - 1];
        if (l.is_marked()) {
            ++c.marked[l.value() - 1];
        } else {
            ++c.unmarked[l.value() - 1];
        }
    }
    return c;
}

CellSet Tableau::band(int i) const {
    CellSet out;
    for (int p = 0; p < size(); ++p) {
        if (letters_[p].value() == i) out.insert(shape_->cells()[p]);
    }
    return out;
}

std::string Tableau::text() const {
    if (size() == 0) return "";
    const CellSet& cs = shape_->cell_set();
    int rmin = 1;  // rows are anchored at 1 in every diagram we print
    int rmax = cs.max_row();
    std::ostringstream out;
    for (int r = rmin; r <= rmax; ++r) {
        int last = 0;
        for (const Cell& c : cs) {
            if (c.row == r) last = std::max(last, c.col);
        }
        if (last == 0) {
            out << ".";
        } else {
            for (int y = 1; y <= last; ++y) {
                if (y > 1) out << ' ';
                auto l = find({r, y});
                out << (l ? l->str() : ".");
            }
        }
        out << '\n';
    }
    return out.str();
}

Tableau Tableau::parse_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<Cell, Letter>> entries;
    CellSet cells;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::istringstream ls(line);
        std::string token;
        int col = 0;
        while (ls >> token) {
            ++col;
            if (token == ".") continue;
            Cell c{row, col};
            cells.insert(c);
            entries.emplace_back(c, Letter::parse(token));
        }
    }
    return from_entries(cells, entries);
}

bool Tableau::operator==(const Tableau& other) const {
    return shape_->cell_set() == other.shape_->cell_set() && letters_ == other.letters_;
}

Word reading_word(const Tableau& t) {
    Word w;
    w.letters.reserve(t.size());
    w.boxes = t.shape().cells();
    for (int i = 0; i < t.size(); ++i) w.letters.push_back(t.at_pos(i));
    return w;
}

std::vector<int> m_stats(const Word& w, int i) {
    const int n = w.size();
    std::vector<int> m(2 * n + 1, 0);
    for (int j = 1; j <= n; ++j) {
        const Letter& l = w.letters[n - j];  // w_{n-j+1}
        m[j] = m[j - 1] + (!l.is_marked() && l.value() == i ? 1 : 0);
    }
    for (int j = n + 1; j <= 2 * n; ++j) {
        const Letter& l = w.letters[j - n - 1];  // w_{j-n}
        m[j] = m[j - 1] + (l.is_marked() && l.value() == i ? 1 : 0);
    }
    return m;
}

}  // namespace schurq
