#include "schurq/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schurq {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidPartition("partition parts must be positive, got " +
                                   std::to_string(parts_[i]));
        if (i > 0 && parts_[i - 1] <= parts_[i])
            throw InvalidPartition("partition parts must be strictly decreasing near " +
                                   std::to_string(parts_[i]));
    }
}

StrictPartition StrictPartition::parse(const std::string& literal) {
    if (literal.empty()) throw ParseError("empty partition literal (use '0' for the empty partition)");
    if (literal == "0") return StrictPartition{};
    std::vector<int> parts;
    std::string token;
    std::istringstream in(literal);
    while (std::getline(in, token, ',')) {
        if (token.empty())
            throw ParseError("empty part in partition literal '" + literal + "'");
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad partition part '" + token + "'");
        }
        if (pos != token.size()) throw ParseError("bad partition part '" + token + "'");
        parts.push_back(value);
    }
    if (!literal.empty() && literal.back() == ',')
        throw ParseError("trailing comma in partition literal '" + literal + "'");
    try {
        return StrictPartition(std::move(parts));
    } catch (const InvalidPartition& e) {
        throw ParseError(std::string(e.what()) + " in literal '" + literal + "'");
    }
}

std::string StrictPartition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long long StrictPartition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int StrictPartition::part(int i) const {
    if (i < 1) throw OutOfRange("part index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

bool StrictPartition::contains(const StrictPartition& other) const {
    if (other.length() > length()) return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

std::strong_ordering StrictPartition::operator<=>(const StrictPartition& other) const {
    int n = std::max(length(), other.length());
    for (int i = 1; i <= n; ++i) {
        if (auto c = part(i) <=> other.part(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

StrictPartition partition_difference(const StrictPartition& lambda,
                                     const StrictPartition& mu) {
    std::vector<int> rest(lambda.parts());
    for (int p : mu.parts()) {
        auto it = std::find(rest.begin(), rest.end(), p);
        if (it == rest.end())
            throw NotSubset("part " + std::to_string(p) + " of " + mu.str() +
                            " does not occur in " + lambda.str());
        rest.erase(it);
    }
    return StrictPartition(std::move(rest));
}

bool is_staircase(const StrictPartition& lambda) {
    int r = lambda.length();
    for (int i = 1; i <= r; ++i)
        if (lambda.part(i) != r - i + 1) return false;
    return true;
}

namespace {

void strict_partitions_rec(int remaining, int max_part,
                           std::vector<int>& acc,
                           std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // The tail below p can hold at most p*(p-1)/2 more cells.
        if (remaining - p > p * (p - 1) / 2) continue;
        acc.push_back(p);
        strict_partitions_rec(remaining - p, p - 1, acc, out);
        acc.pop_back();
    }
}

void subpartitions_rec(const StrictPartition& lambda, int row, int max_part,
                       std::vector<int>& acc,
                       std::vector<StrictPartition>& out) {
    out.emplace_back(acc);
    if (row > lambda.length()) return;
    for (int p = std::min(max_part, lambda.part(row)); p >= 1; --p) {
        acc.push_back(p);
        subpartitions_rec(lambda, row + 1, p - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> strict_partitions_of(int n) {
    if (n < 0) throw OutOfRange("strict_partitions_of needs n >= 0");
    std::vector<StrictPartition> out;
    std::vector<int> acc;
    strict_partitions_rec(n, n, acc, out);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

std::vector<StrictPartition> strict_subpartitions(const StrictPartition& lambda) {
    std::vector<StrictPartition> out;
    std::vector<int> acc;
    subpartitions_rec(lambda, 1, lambda.part(1), acc, out);
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
}

}  // namespace schurq
