#include "ytl/partitions.hpp"

#include <charconv>
#include <numeric>

namespace ytl {

namespace {

Uint sum_parts(const std::vector<unsigned>& parts) {
    Uint s = 0;
    for (unsigned p : parts)
        s = checked_add(s, p);
    return s;
}

void validate_parts(const std::vector<unsigned>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0)
            throw InvalidArgument("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw InvalidArgument("partition parts must be weakly decreasing");
    }
}

} // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    validate_parts(parts_);
    size_ = sum_parts(parts_);
}

Partition::Partition(std::initializer_list<unsigned> parts)
    : Partition(std::vector<unsigned>(parts)) {}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length())
        return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i])
            return false;
    return true;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw NotContained("inner partition does not fit inside the outer one");
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw InvalidArgument("a multipartition needs at least one component");
    for (const Partition& p : components_)
        size_ = checked_add(size_, p.size());
}

Multipartition::Multipartition(std::initializer_list<Partition> components)
    : Multipartition(std::vector<Partition>(components)) {}

std::vector<Node> removable_nodes(const Partition& p) {
    std::vector<Node> nodes;
    for (std::size_t i = 0; i < p.length(); ++i) {
        // the end-of-row box is removable iff the next row is shorter
        if (p.part(i) > p.part(i + 1))
            nodes.push_back(Node{static_cast<unsigned>(i + 1), p.part(i)});
    }
    return nodes;
}

namespace {

void gen_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (unsigned first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        gen_partitions(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    gen_partitions(n, n == 0 ? 1 : n, prefix, out);
    return out;
}

std::vector<Multipartition> multipartitions_of(unsigned d, unsigned n) {
    if (d == 0)
        throw InvalidArgument("multipartitions need d >= 1");

    // Partitions of every possible component size, generated once.
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (unsigned k = 0; k <= n; ++k)
        by_size[k] = partitions_of(k);

    std::vector<Multipartition> out;
    std::vector<Partition> tuple;
    auto recurse = [&](auto&& self, unsigned index, unsigned remaining) -> void {
        if (index + 1 == d) {
            for (const Partition& p : by_size[remaining]) {
                tuple.push_back(p);
                out.push_back(Multipartition(tuple));
                tuple.pop_back();
            }
            return;
        }
        for (unsigned k = 0; k <= remaining; ++k) {
            for (const Partition& p : by_size[k]) {
                tuple.push_back(p);
                self(self, index + 1, remaining - k);
                tuple.pop_back();
            }
        }
    };
    recurse(recurse, 0, n);
    return out;
}

Uint catalan(unsigned n) {
    // C_{k+1} = C_k * 2(2k+1)/(k+2); after gcd reduction the denominator
    // divides C_k, so every intermediate equals a Catalan number and the
    // computation throws only when the result itself overflows.
    Uint c = 1;
    for (unsigned k = 0; k < n; ++k) {
        Uint num = 2 * (2 * static_cast<Uint>(k) + 1);
        Uint den = k + 2;
        Uint g = std::gcd(num, den);
        num /= g;
        den /= g;
        c = checked_mul(c / den, num);
    }
    return c;
}

namespace {

unsigned parse_positive_int(std::string_view token) {
    if (token.empty())
        throw ParseError("empty part in partition text");
    if (token[0] == '0')
        throw ParseError("parts must be positive with no leading zeros");
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("not a positive integer: '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> pieces;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            pieces.push_back(text.substr(start));
            return pieces;
        }
        pieces.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

Partition parse_partition(std::string_view text) {
    if (text.empty())
        return Partition{};
    std::vector<unsigned> parts;
    for (std::string_view token : split(text, ','))
        parts.push_back(parse_positive_int(token));
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw ParseError("parts must be weakly decreasing: '" + std::string(text) + "'");
    return Partition(std::move(parts));
}

Multipartition parse_multipartition(std::string_view text) {
    std::vector<Partition> components;
    for (std::string_view piece : split(text, '|'))
        components.push_back(parse_partition(piece));
    return Multipartition(std::move(components));
}

std::string to_text(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

std::string to_text(const Multipartition& mp) {
    std::string s;
    for (std::size_t i = 0; i < mp.tuple_length(); ++i) {
        if (i)
            s += '|';
        s += to_text(mp.component(i));
    }
    return s;
}

} // namespace ytl
