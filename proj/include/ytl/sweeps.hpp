#pragma once

#include "ytl/arith.hpp"
#include "ytl/exec.hpp"

namespace ytl {

/// Outcome of an exhaustive verification sweep: how many cases were
/// checked and how many violated the property under test.
struct SweepStats {
    Uint cases = 0;
    Uint failures = 0;

    bool ok() const { return failures == 0; }
    SweepStats& operator+=(const SweepStats& o) {
        cases += o.cases;
        failures += o.failures;
        return *this;
    }
};

/// Commutativity and associativity of Schur products, checked on every
/// pair/triple of partitions with total size <= max_total.
SweepStats verify_product_identities(unsigned max_total, Exec exec);

/// First-row bound for pair products: for every lam, mu with
/// |lam|+|mu| <= max_total, no product term exceeds lam_1+mu_1 in its
/// first part, the bound is attained, and the componentwise-sum witness
/// carries a positive coefficient.
SweepStats verify_first_row_bounds(unsigned max_total, Exec exec);

/// The d-partition analogue on restriction tables: the first-part bound
/// alpha is never exceeded and always attained, and the table preserves
/// the total dimension. All d <= max_d, |lambda| <= max_size.
SweepStats verify_restriction_bounds(unsigned max_d, unsigned max_size, Exec exec);

/// Runs both Littlewood-Richardson checkers on every semistandard skew
/// tableau with outer size <= max_outer (entries bounded by the skew
/// size) and counts disagreements; also flags LR tableaux whose first
/// row contains an entry other than 1.
SweepStats verify_lr_checker_agreement(unsigned max_outer, Exec exec);

/// Sum over all d-partitions of n of the squared standard d-tableau
/// count; equals d^n * n! by semisimplicity of the group algebra.
Uint group_algebra_dimension(unsigned d, unsigned n, Exec exec);

} // namespace ytl
