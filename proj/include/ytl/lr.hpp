#pragma once

#include <map>

#include "ytl/partitions.hpp"
#include "ytl/tableaux.hpp"

namespace ytl {

/**
 * A homogeneous expansion in the Schur basis: a finite map from
 * partitions of the degree to positive coefficients. Zero coefficients
 * are never stored; iteration follows the canonical partition order.
 */
class SchurExpansion {
public:
    using Terms = std::map<Partition, Uint, CanonicalLess>;

    explicit SchurExpansion(Uint degree) : degree_(degree) {}

    Uint degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    Uint coefficient(const Partition& key) const;

    /// Accumulates count onto the key's coefficient (checked).
    /// Throws InvalidArgument when |key| != degree.
    void add(const Partition& key, Uint count);

    bool operator==(const SchurExpansion&) const = default;

private:
    Uint degree_;
    Terms terms_;
};

/// Littlewood-Richardson coefficient c^nu_{lam,mu}: the number of
/// Littlewood-Richardson tableaux of shape nu/lam and weight mu.
/// Degenerate inputs (nu/lam not a skew shape, size mismatch) give 0.
/// Results are memoized behind a shared cache; see lr_cache_clear.
Uint lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/// Expansion of s_lam * s_mu; terms are the LR coefficients.
SchurExpansion schur_product(const Partition& lam, const Partition& mu);

/// Linear extension: result[pi] = sum_sigma e[sigma] * c^pi_{sigma,mu}.
SchurExpansion expansion_product(const SchurExpansion& e, const Partition& mu);

/// Expansion of s_lam * s_(l) by direct horizontal-strip generation
/// (l boxes added, no two in the same column); every coefficient is 1.
/// The generic schur_product serves as its oracle in tests.
SchurExpansion pieri_row(const Partition& lam, unsigned l);

/// max{nu_1 : c^nu_{lam,mu} > 0}, found by scanning the full product.
/// Exists to test the bound lemma (the value should be lam_1 + mu_1),
/// so it deliberately does not assume it.
Uint max_attained_first_row(const Partition& lam, const Partition& mu);

/// Drops all memoized LR coefficients (used by benchmarks).
void lr_cache_clear();

} // namespace ytl
