#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ytl/partitions.hpp"

namespace ytl {

/**
 * Entry multiplicities of a tableau: count(i) is the number of entries
 * equal to i. Trailing zero counts are trimmed, so two weights compare
 * equal iff they count the same multiset.
 */
class Weight {
public:
    Weight() = default;
    Weight(std::initializer_list<unsigned> counts);
    explicit Weight(std::vector<unsigned> counts);

    const std::vector<unsigned>& counts() const { return counts_; }
    /// Multiplicity of the value v (1-based); 0 past the end.
    unsigned count(unsigned v) const {
        return v >= 1 && v <= counts_.size() ? counts_[v - 1] : 0;
    }
    /// Largest value with nonzero count (0 for the empty weight).
    unsigned max_value() const { return static_cast<unsigned>(counts_.size()); }
    Uint total() const { return total_; }

    /// Weakly decreasing counts, i.e. the weight of some partition.
    bool is_partition() const;
    /// Throws InvalidArgument when not weakly decreasing.
    Partition to_partition() const;

    bool operator==(const Weight&) const = default;

private:
    std::vector<unsigned> counts_;
    Uint total_ = 0;
};

/**
 * A filling of a skew shape: rows()[r] lists the entries of diagram row
 * r+1 left to right. Construction checks the row lengths against the
 * shape and that entries are >= 1; the ordering conditions are queried
 * separately via is_semistandard.
 */
class SkewTableau {
public:
    SkewTableau(SkewShape shape, std::vector<std::vector<unsigned>> rows);

    const SkewShape& shape() const { return shape_; }
    const std::vector<std::vector<unsigned>>& rows() const { return rows_; }
    Uint size() const { return shape_.size(); }

    /// Entry in 0-based diagram coordinates; 0 when the cell is absent.
    unsigned entry_at(std::size_t row, unsigned col) const;

    bool operator==(const SkewTableau&) const = default;

private:
    SkewShape shape_;
    std::vector<std::vector<unsigned>> rows_;
};

/// Rows weakly increase left to right, columns strictly increase downwards.
bool is_semistandard(const SkewTableau& t);

Weight weight_of(const SkewTableau& t);

/// Number of entries equal to value in row (1-based); 0 for rows out of range.
Uint entry_count(const SkewTableau& t, unsigned row, unsigned value);

/// Companion relation: entry_count(a,k,l) == entry_count(b,l,k) for all k,l.
bool is_companion(const SkewTableau& a, const SkewTableau& b);

/// The unique filling of straight shape weight_of(t) whose entry counts
/// mirror those of t. Empty when the weight is not a partition. The
/// result need not be semistandard; t is a Littlewood-Richardson tableau
/// exactly when it is.
std::optional<SkewTableau> companion_candidate(const SkewTableau& t);

/// Littlewood-Richardson test by companion construction (the reference
/// implementation). Throws NotSemistandard.
bool is_lr_tableau(const SkewTableau& t);

/// Same predicate via the reverse reading word lattice condition; kept
/// independent so the two can be cross-checked. Throws NotSemistandard.
bool is_lr_tableau_lattice(const SkewTableau& t);

/// All semistandard fillings of the shape with the given weight, in
/// row-major lexicographic order of their entries.
/// Throws SizeMismatch unless weight.total() == shape.size().
std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, const Weight& weight);

/// Number of standard tableaux of straight shape p (hook lengths).
Uint count_standard_tableaux(const Partition& p);

/// Number of standard d-tableaux of shape mp: multinomial over the
/// component sizes times the product of the component counts.
Uint count_standard_d_tableaux(const Multipartition& mp);

/// Comma-separated nonnegative counts; "" is the empty weight.
Weight parse_weight(std::string_view text);

} // namespace ytl
