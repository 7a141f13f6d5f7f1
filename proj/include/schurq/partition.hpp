#pragma once

#include <compare>
#include <string>
#include <vector>

#include "schurq/errors.hpp"

namespace schurq {

// A strict partition: finitely many strictly decreasing positive integer parts.
// Missing parts count as 0, so lexicographic comparison pads with zeros.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    static StrictPartition parse(const std::string& literal);
    // Empty partition prints as "0"; otherwise comma-joined parts.
    std::string str() const;

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long sum() const;
    // part(i) is 1-based and returns 0 beyond the last part.
    int part(int i) const;

    // Componentwise diagram containment: len(other) <= len(this) is not
    // required; other.part(i) <= part(i) for all i is.
    bool contains(const StrictPartition& other) const;

    bool operator==(const StrictPartition&) const = default;
    // Total order: lexicographic with missing parts read as 0.
    std::strong_ordering operator<=>(const StrictPartition& other) const;

private:
    std::vector<int> parts_;
};

// Multiset difference of parts. Every part of mu must occur among the parts of
// lambda (NotSubset otherwise).
StrictPartition partition_difference(const StrictPartition& lambda,
                                     const StrictPartition& mu);

// True iff lambda = (r, r-1, ..., 1) for some r >= 1, or lambda is empty (r=0).
bool is_staircase(const StrictPartition& lambda);

// All strict partitions of n (n >= 0), in lexicographically descending order.
std::vector<StrictPartition> strict_partitions_of(int n);

// All strict partitions contained in lambda's diagram (componentwise), any size.
std::vector<StrictPartition> strict_subpartitions(const StrictPartition& lambda);

}  // namespace schurq
