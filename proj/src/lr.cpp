#include "ytl/lr.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace ytl {

Uint SchurExpansion::coefficient(const Partition& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add(const Partition& key, Uint count) {
    if (count == 0)
        return;
    if (key.size() != degree_)
        throw InvalidArgument("expansion term has the wrong degree");
    Uint& slot = terms_[key];
    slot = checked_add(slot, count);
}

namespace {

using CacheKey = std::tuple<Partition, Partition, Partition>;
std::map<CacheKey, Uint> lr_cache;          // guarded by lr_cache_mutex
std::shared_mutex lr_cache_mutex;

Uint count_lr_tableaux(const SkewShape& shape, const Partition& mu) {
    Uint count = 0;
    for (const SkewTableau& t : enumerate_ssyt(shape, Weight(mu.parts())))
        if (is_lr_tableau(t))
            ++count;
    return count;
}

} // namespace

void lr_cache_clear() {
    std::unique_lock lock(lr_cache_mutex);
    lr_cache.clear();
}

Uint lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (!nu.contains(lam) || nu.size() - lam.size() != mu.size())
        return 0;
    CacheKey key(lam, mu, nu);
    {
        std::shared_lock lock(lr_cache_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end())
            return it->second;
    }
    Uint count = count_lr_tableaux(SkewShape(nu, lam), mu);
    {
        std::unique_lock lock(lr_cache_mutex);
        lr_cache.emplace(std::move(key), count);
    }
    return count;
}

SchurExpansion schur_product(const Partition& lam, const Partition& mu) {
    Uint degree = checked_add(lam.size(), mu.size());
    SchurExpansion result(degree);
    // Scan the full degree, with no shortcut on the shape of nu: the
    // vanishing bounds on the support are theorems under test elsewhere.
    for (const Partition& nu : partitions_of(static_cast<unsigned>(degree)))
        result.add(nu, lr_coefficient(lam, mu, nu));
    return result;
}

SchurExpansion expansion_product(const SchurExpansion& e, const Partition& mu) {
    SchurExpansion result(checked_add(e.degree(), mu.size()));
    for (const auto& [sigma, c] : e.terms()) {
        SchurExpansion partial = schur_product(sigma, mu);
        for (const auto& [pi, c2] : partial.terms())
            result.add(pi, checked_mul(c, c2));
    }
    return result;
}

namespace {

// Extend lam by a horizontal strip, distributing the remaining boxes
// over rows `row` and below; emits each resulting partition once.
void add_strips(const Partition& lam, std::size_t row, unsigned remaining,
                std::vector<unsigned>& prefix, SchurExpansion& out) {
    if (row > lam.length()) {
        if (remaining == 0) {
            std::vector<unsigned> parts = prefix;
            while (!parts.empty() && parts.back() == 0)
                parts.pop_back();
            out.add(Partition(std::move(parts)), 1);
        }
        return;
    }
    // row may grow up to the row above it in lam (strip condition), and
    // the final row below the diagram may take at most lam's last part.
    unsigned base = lam.part(row);
    unsigned cap = row == 0 ? base + remaining : lam.part(row - 1);
    for (unsigned grown = base; grown <= cap && grown - base <= remaining; ++grown) {
        prefix.push_back(grown);
        add_strips(lam, row + 1, remaining - (grown - base), prefix, out);
        prefix.pop_back();
    }
}

} // namespace

SchurExpansion pieri_row(const Partition& lam, unsigned l) {
    SchurExpansion result(checked_add(lam.size(), l));
    std::vector<unsigned> prefix;
    add_strips(lam, 0, l, prefix, result);
    return result;
}

Uint max_attained_first_row(const Partition& lam, const Partition& mu) {
    Uint best = 0;
    SchurExpansion product = schur_product(lam, mu);
    for (const auto& [nu, c] : product.terms())
        best = std::max<Uint>(best, nu.first());
    return best;
}

} // namespace ytl
