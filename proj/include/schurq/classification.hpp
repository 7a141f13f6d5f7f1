#pragma once

#include <optional>
#include <string>

#include "schurq/shapes.hpp"
#include "schurq/tableau.hpp"

namespace schurq {

// The five shape families whose Q-function is a single term c * Q_nu, stated
// for basic shapes lambda/mu:
//   I    mu empty (straight shapes), coefficient 1,
//   II   lambda a staircase (r,...,1) and 0 < length(mu) <= r-2,
//        coefficient 1, nu = the staircase parts minus the mu parts,
//   III  lambda = (p+q+r, ..., p) a consecutive run, mu = (q, ..., 1),
//        p,q,r >= 1, coefficient 1,
//   IV   same with r = 0, coefficient 1,
//   V    lambda = (r+2, r, r-1, ..., 1), mu = (r+1), coefficient 2.
enum class Family { I, II, III, IV, V };

std::string family_name(Family f);

struct Homogeneous {
    long long coefficient = 1;
    StrictPartition nu;
    Family family = Family::I;
};

struct ClassificationResult {
    SkewShape normalized;  // the basic shape that was pattern-matched
    bool zero = false;     // inner partition not contained: Q = 0
    bool homogeneous = false;
    std::optional<Homogeneous> hom;
    // For inhomogeneous shapes: an amenable filling whose content differs
    // from the lex-largest one, certifying a second expansion term. Absent
    // when the shape is connected with connected bands (and for Q = 0).
    std::optional<Tableau> witness;
};

ClassificationResult classify(const SkewShape& shape);

// Second-term witnesses for disconnected basic shapes. Tries the shape and
// its orthogonal transpose; empty exactly for family V shapes.
std::optional<Tableau> witness_disconnected(const SkewShape& basic);

// Second-term witness for a connected basic shape some of whose bands are
// disconnected; empty when every band is connected.
std::optional<Tableau> witness_connected(const SkewShape& basic);

// Q_{lambda/mu} = Q_nu when lambda is a staircase and mu fits inside it:
// nu is the multiset difference of the parts. PreconditionViolated otherwise.
StrictPartition staircase_reduce(const SkewShape& shape);

}  // namespace schurq
