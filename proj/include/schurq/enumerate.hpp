#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "schurq/tableau.hpp"

namespace schurq {
namespace detail {

// Depth-first generator of valid fillings in reading-word order. Letter codes
// are chosen increasingly per position, so tableaux come out in a fixed order.
// Validity is enforced locally against the left and below neighbors, which is
// equivalent to full validity because both constraints only couple adjacent
// cells.
class TableauEnumerator {
public:
    TableauEnumerator(std::shared_ptr<const ShapeIndex> shape, int max_value)
        : shape_(std::move(shape)), max_code_(2 * max_value) {
        init();
    }

    // Exact-content mode: tableaux whose content is precisely `caps`
    // (counts by value). Sizes must match for anything to be produced.
    TableauEnumerator(std::shared_ptr<const ShapeIndex> shape, std::vector<int> caps)
        : shape_(std::move(shape)),
          max_code_(2 * static_cast<int>(caps.size())),
          caps_(std::move(caps)),
          capped_(true) {
        init();
        long long total = 0;
        for (int c : caps_) total += c;
        if (total != shape_->size()) exhausted_ = true;
    }

    // Advances to the next tableau; false when exhausted. The current filling
    // is then available via letters()/make_tableau().
    bool advance() {
        const int n = shape_->size();
        if (exhausted_) return false;
        if (n == 0) {
            exhausted_ = true;  // exactly one empty filling
            return !emitted_empty_ ? (emitted_empty_ = true) : false;
        }
        int pos = started_ ? n - 1 : 0;
        if (started_) release(pos);
        started_ = true;
        while (pos >= 0) {
            int c = next_code(pos);
            if (c == 0) {
                codes_[pos] = 0;
                --pos;
                if (pos >= 0) release(pos);
                continue;
            }
            codes_[pos] = c;
            take(pos);
            ++pos;
            if (pos == n) return true;
        }
        exhausted_ = true;
        return false;
    }

    const std::vector<int>& codes() const { return codes_; }

    Tableau make_tableau() const {
        std::vector<Letter> letters;
        letters.reserve(codes_.size());
        for (int c : codes_) letters.push_back(Letter::from_code(c));
        return Tableau(shape_, std::move(letters));
    }

private:
    void init() {
        codes_.assign(shape_->size(), 0);
        if (capped_) {
            for (int c : caps_) {
                if (c < 0) throw OutOfRange("negative content cap");
            }
        }
    }

    // Smallest admissible code strictly above codes_[pos], or 0 if none.
    int next_code(int pos) {
        int lo = codes_[pos] + 1;
        int hi = max_code_;
        int left = shape_->left_of(pos);
        int below = shape_->below_of(pos);
        int lc = left >= 0 ? codes_[left] : 0;
        int bc = below >= 0 ? codes_[below] : 0;
        if (lc > lo) lo = lc;
        if (bc && bc < hi) hi = bc;
        for (int c = lo; c <= hi; ++c) {
            bool marked = (c & 1) != 0;
            if (c == lc && marked) continue;    // marked letters don't repeat in rows
            if (c == bc && !marked) continue;   // unmarked letters don't repeat in columns
            if (capped_ && caps_[(c + 1) / 2 - 1] == 0) continue;
            return c;
        }
        return 0;
    }

    void take(int pos) {
        if (capped_) --caps_[(codes_[pos] + 1) / 2 - 1];
    }
    void release(int pos) {
        if (capped_ && codes_[pos] != 0) ++caps_[(codes_[pos] + 1) / 2 - 1];
    }

    std::shared_ptr<const ShapeIndex> shape_;
    int max_code_;
    std::vector<int> codes_;
    std::vector<int> caps_;
    bool capped_ = false;
    bool started_ = false;
    bool emitted_empty_ = false;
    bool exhausted_ = false;
};

}  // namespace detail

// Streaming interface: next() yields tableaux until std::nullopt.
class TableauStream {
public:
    TableauStream(const CellSet& cells, int max_value)
        : enumerator_(std::make_shared<const ShapeIndex>(cells), max_value) {}
    TableauStream(const CellSet& cells, std::vector<int> content)
        : enumerator_(std::make_shared<const ShapeIndex>(cells), std::move(content)) {}

    std::optional<Tableau> next() {
        if (!enumerator_.advance()) return std::nullopt;
        return enumerator_.make_tableau();
    }

private:
    detail::TableauEnumerator enumerator_;
};

// Visits every valid filling with values in 1..max_value. The callback gets a
// tableau that is reused between calls; copy it to keep it.
template <typename F>
void for_each_tableau(const CellSet& cells, int max_value, F&& fn) {
    detail::TableauEnumerator e(std::make_shared<const ShapeIndex>(cells), max_value);
    while (e.advance()) {
        Tableau t = e.make_tableau();
        fn(static_cast<const Tableau&>(t));
    }
}

// Visits every valid filling with the given exact content (counts by value).
template <typename F>
void for_each_tableau_with_content(const CellSet& cells, const std::vector<int>& content, F&& fn) {
    detail::TableauEnumerator e(std::make_shared<const ShapeIndex>(cells), content);
    while (e.advance()) {
        Tableau t = e.make_tableau();
        fn(static_cast<const Tableau&>(t));
    }
}

long long count_tableaux(const CellSet& cells, int max_value);

}  // namespace schurq
