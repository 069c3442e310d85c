#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "ytl/arith.hpp"
#include "ytl/errors.hpp"

namespace ytl {

/**
 * A partition: weakly decreasing list of positive integers, identified
 * with its Young diagram. The empty list is the empty partition.
 * Immutable after construction.
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts);
    /// Throws InvalidArgument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Number of boxes.
    Uint size() const { return size_; }

    /// i-th part, 0-based; rows past the last one read as 0.
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// First part (diagram width); 0 for the empty partition.
    unsigned first() const { return part(0); }

    /// True iff inner's diagram sits inside this one.
    bool contains(const Partition& inner) const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<unsigned> parts_;
    Uint size_ = 0;
};

/// Canonical listing order: decreasing lexicographic,
/// (3) before (2,1) before (1,1,1).
struct CanonicalLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return b.parts() < a.parts();
    }
};

/// A box of a Young diagram, 1-based.
struct Node {
    unsigned row = 0;
    unsigned col = 0;
    bool operator==(const Node&) const = default;
};

/**
 * A skew shape outer/inner. Construction checks containment.
 * Row r (0-based) occupies 0-based columns [row_begin(r), row_end(r)).
 */
class SkewShape {
public:
    /// Throws NotContained when some inner part exceeds the outer one.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    /// Number of boxes, |outer| - |inner|.
    Uint size() const { return outer_.size() - inner_.size(); }

    std::size_t rows() const { return outer_.length(); }
    unsigned row_begin(std::size_t r) const { return inner_.part(r); }
    unsigned row_end(std::size_t r) const { return outer_.part(r); }
    unsigned row_length(std::size_t r) const { return row_end(r) - row_begin(r); }

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

/**
 * A d-tuple of partitions with d >= 1; the total size is the sum of the
 * component sizes.
 */
class Multipartition {
public:
    /// Throws InvalidArgument when the tuple is empty (d = 0).
    explicit Multipartition(std::vector<Partition> components);
    Multipartition(std::initializer_list<Partition> components);

    const std::vector<Partition>& components() const { return components_; }
    std::size_t tuple_length() const { return components_.size(); }
    const Partition& component(std::size_t i) const { return components_[i]; }
    Uint size() const { return size_; }

    bool operator==(const Multipartition&) const = default;
    auto operator<=>(const Multipartition&) const = default;

private:
    std::vector<Partition> components_;
    Uint size_ = 0;
};

/// Boxes whose removal leaves a partition, in increasing row order.
std::vector<Node> removable_nodes(const Partition& p);

/// All partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

/// All d-tuples of partitions with total size n. Ordered by the size
/// composition (k_0,...,k_{d-1}) lexicographically, then componentwise in
/// decreasing lexicographic order. Throws InvalidArgument when d = 0.
std::vector<Multipartition> multipartitions_of(unsigned d, unsigned n);

/// n-th Catalan number binom(2n,n)/(n+1), exact; throws OverflowError.
Uint catalan(unsigned n);

// Text form: comma-separated weakly decreasing positive integers, "" for
// the empty partition; multipartitions join component texts with '|'
// (trailing empty components are significant, they fix d).
Partition parse_partition(std::string_view text);
Multipartition parse_multipartition(std::string_view text);
std::string to_text(const Partition& p);
std::string to_text(const Multipartition& mp);

} // namespace ytl
