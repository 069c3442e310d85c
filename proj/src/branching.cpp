#include "ytl/branching.hpp"

#include <algorithm>
#include <functional>

#include "ytl/tableaux.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ytl {

std::vector<Multipartition> ClassificationResult::all() const {
    std::vector<Multipartition> out = r1;
    out.insert(out.end(), r2.begin(), r2.end());
    return out;
}

BranchingTable restriction_multiplicities(const Multipartition& mp) {
    // Iterated product, seeded with the first component alone; empty
    // components multiply by s_0 = 1 and are skipped.
    SchurExpansion acc(0);
    acc.add(Partition{}, 1);
    for (const Partition& component : mp.components())
        if (!component.empty())
            acc = expansion_product(acc, component);
    return BranchingTable{mp, std::move(acc)};
}

Uint alpha(const Multipartition& mp) {
    Uint total = 0;
    for (const Partition& component : mp.components())
        total = checked_add(total, component.first());
    return total;
}

namespace {

void require_ytl_range(Uint n) {
    if (n < 3)
        throw InvalidArgument("YTL_{d,n}(u) requires n >= 3");
}

} // namespace

bool is_in_R(const Multipartition& mp) {
    require_ytl_range(mp.size());
    return alpha(mp) <= 2;
}

bool restriction_contains_trivial_s3(const Multipartition& mp) {
    require_ytl_range(mp.size());
    // E^nu restricts from S_n to S_3 with the trivial summand E^{(3)}
    // exactly when nu_1 >= 3, so scan the S_n table for such a term.
    BranchingTable table = restriction_multiplicities(mp);
    for (const auto& [nu, c] : table.terms())
        if (nu.first() >= 3)
            return true;
    return false;
}

ClassificationResult classify_R(unsigned d, unsigned n) {
    if (d == 0)
        throw InvalidArgument("d must be positive");
    require_ytl_range(n);

    ClassificationResult result;
    result.d = d;
    result.n = n;

    std::vector<Partition> empties(d);

    // R1: one nonempty component, a two-column partition of n.
    for (unsigned i = 0; i < d; ++i)
        for (const Partition& p : partitions_of(n)) {
            if (p.first() > 2)
                continue;
            std::vector<Partition> components = empties;
            components[i] = p;
            result.r1.emplace_back(std::move(components));
        }

    // R2: two nonempty single-column components, heights k and n-k.
    for (unsigned i1 = 0; i1 < d; ++i1)
        for (unsigned i2 = i1 + 1; i2 < d; ++i2)
            for (unsigned k = 1; k < n; ++k) {
                std::vector<Partition> components = empties;
                components[i1] = Partition(std::vector<unsigned>(k, 1));
                components[i2] = Partition(std::vector<unsigned>(n - k, 1));
                result.r2.emplace_back(std::move(components));
            }

    return result;
}

Uint ytl_dimension_formula(unsigned d, unsigned n) {
    if (d == 0)
        throw InvalidArgument("d must be positive");
    require_ytl_range(n);
    // d*(n*d - n + d + 1) is even: the factor in parentheses is even
    // when d is odd and n arbitrary, and d supplies the 2 otherwise.
    Uint t = checked_mul(d, checked_add(checked_mul(n, static_cast<Uint>(d) - 1),
                                        static_cast<Uint>(d) + 1));
    Uint lead = checked_mul(t / 2, catalan(n));
    return checked_sub(lead, checked_mul(d, d - 1));
}

Uint ytl_dimension_sum(unsigned d, unsigned n, Exec exec) {
    std::vector<Multipartition> labels = classify_R(d, n).all();
    std::vector<Uint> squares(labels.size(), 0);

    auto body = [&](std::size_t i) {
        Uint f = count_standard_d_tableaux(labels[i]);
        squares[i] = checked_mul(f, f);
    };

#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(labels.size()); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else
#else
    (void)exec;
#endif
    {
        for (std::size_t i = 0; i < labels.size(); ++i)
            body(i);
    }

    Uint total = 0;
    for (Uint s : squares)
        total = checked_add(total, s);
    return total;
}

namespace {

// Search for a witness componentwise: strip s_j boxes from component j
// as a horizontal strip (mu_i in [lam_{i+1}, lam_i]), candidates tried
// in decreasing lexicographic order, components left to right.
bool strip_component(const Partition& lam, std::size_t row, unsigned remaining,
                     std::vector<unsigned>& rows,
                     const std::function<bool(unsigned)>& next) {
    if (row == lam.length())
        return next(remaining);
    unsigned hi = lam.part(row);
    unsigned lo = lam.part(row + 1);
    for (unsigned kept = hi; kept + remaining >= hi && kept >= lo; --kept) {
        rows.push_back(kept);
        if (strip_component(lam, row + 1, remaining - (hi - kept), rows, next))
            return true;
        rows.pop_back();
        if (kept == 0)
            break;
    }
    return false;
}

} // namespace

std::optional<Multipartition> pieri_membership_witness(const Multipartition& mp, unsigned l) {
    if (l == 0)
        throw InvalidArgument("strip size must be positive");
    if (mp.size() < l)
        throw InvalidArgument("cannot remove more boxes than the d-diagram has");

    std::vector<Partition> witness(mp.tuple_length());
    // Depth-first over components; each level peels a horizontal strip
    // off its component and passes the rest of the budget along.
    std::function<bool(std::size_t, unsigned)> search =
        [&](std::size_t comp, unsigned remaining) -> bool {
        if (comp == mp.tuple_length())
            return remaining == 0;
        const Partition& lam = mp.component(comp);
        std::vector<unsigned> rows;
        std::function<bool(unsigned)> next = [&](unsigned left) {
            std::vector<unsigned> parts = rows;
            while (!parts.empty() && parts.back() == 0)
                parts.pop_back();
            witness[comp] = Partition(std::move(parts));
            return search(comp + 1, left);
        };
        return strip_component(lam, 0, remaining, rows, next);
    };

    if (search(0, l))
        return Multipartition(std::move(witness));
    return std::nullopt;
}

} // namespace ytl
