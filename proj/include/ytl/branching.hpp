#pragma once

#include <optional>
#include <vector>

#include "ytl/exec.hpp"
#include "ytl/lr.hpp"
#include "ytl/partitions.hpp"

namespace ytl {

/**
 * Multiplicities c^nu_lambda of the restriction of the G(d,1,n)
 * irreducible labelled by a d-partition lambda down to S_n: the iterated
 * Schur product of the components.
 */
struct BranchingTable {
    Multipartition source;
    SchurExpansion expansion;

    const SchurExpansion::Terms& terms() const { return expansion.terms(); }
};

/**
 * The set R(d,n) labelling the irreducibles of the Yokonuma-Temperley-
 * Lieb algebra YTL_{d,n}(u), split as in the dimension count:
 * r1 holds the d-partitions with a single nonempty component of at most
 * two columns, r2 those with exactly two nonempty single-column
 * components.
 */
struct ClassificationResult {
    unsigned d = 0;
    unsigned n = 0;
    std::vector<Multipartition> r1;
    std::vector<Multipartition> r2;

    std::vector<Multipartition> all() const;
};

/// Iterated product s_{lam^(0)} * s_{lam^(1)} * ... over the components.
BranchingTable restriction_multiplicities(const Multipartition& mp);

/// Sum of the first parts of all components: the total column count
/// bound for the restriction.
Uint alpha(const Multipartition& mp);

/// Membership in R(d,n), i.e. alpha(mp) <= 2.
/// Throws InvalidArgument when |mp| < 3 (YTL is defined for n >= 3).
bool is_in_R(const Multipartition& mp);

/// True iff the restriction to S_3 contains the trivial representation,
/// decided by scanning the S_n branching table for a term with nu_1 >= 3.
/// Must equal !is_in_R(mp). Throws InvalidArgument when |mp| < 3.
bool restriction_contains_trivial_s3(const Multipartition& mp);

/// Enumerates R(d,n) split into r1 and r2, each in a deterministic
/// order (components left to right; partitions in canonical order; r2
/// pairs (i1 < i2) with the height-k column on i1, k = 1..n-1).
/// Throws InvalidArgument when d = 0 or n < 3.
ClassificationResult classify_R(unsigned d, unsigned n);

/// dim YTL_{d,n}(u) by the closed formula
/// d*(n*d - n + d + 1)/2 * C_n - d*(d-1).  Throws for n < 3.
Uint ytl_dimension_formula(unsigned d, unsigned n);

/// Same dimension as the sum over R(d,n) of the squared counts of
/// standard d-tableaux; the independent route against the formula.
Uint ytl_dimension_sum(unsigned d, unsigned n, Exec exec = Exec::serial);

/// Some mu in P(d, |mp|-l) from which mp is reached by adding an l-box
/// horizontal strip (componentwise: no two added boxes share a column of
/// the same component), or nullopt when none exists.
/// Throws InvalidArgument when l = 0 or |mp| < l.
std::optional<Multipartition> pieri_membership_witness(const Multipartition& mp, unsigned l);

} // namespace ytl
