#include "ytl/sweeps.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <utility>
#include <vector>

#include "ytl/branching.hpp"
#include "ytl/lr.hpp"
#include "ytl/partitions.hpp"
#include "ytl/tableaux.hpp"

namespace ytl {
namespace {

// Flat index sweep shared by the kernels below; parallel mode spreads
// the items over OpenMP threads and rethrows the first exception.
void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                {
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        }
        if (failure)
            std::rethrow_exception(failure);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i)
        body(i);
}

std::vector<Partition> partitions_up_to(unsigned max_total) {
    std::vector<Partition> out;
    for (unsigned s = 0; s <= max_total; ++s)
        for (Partition& p : partitions_of(s))
            out.push_back(std::move(p));
    return out;
}

SweepStats tally(std::size_t cases, const std::vector<unsigned char>& ok) {
    SweepStats stats;
    stats.cases = cases;
    for (unsigned char o : ok)
        if (!o)
            ++stats.failures;
    return stats;
}

} // namespace

SweepStats verify_product_identities(unsigned max_total, Exec exec) {
    // Work items are materialized up front so the parallel loops are
    // flat index sweeps over pairs (commutativity) and triples
    // (associativity).
    std::vector<Partition> parts = partitions_up_to(max_total);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (parts[i].size() + parts[j].size() > max_total)
                continue;
            pairs.emplace_back(i, j);
            for (std::size_t k = 0; k < parts.size(); ++k)
                if (parts[i].size() + parts[j].size() + parts[k].size() <= max_total)
                    triples.push_back({i, j, k});
        }

    std::vector<unsigned char> pair_ok(pairs.size(), 0);
    for_each_index(pairs.size(), exec, [&](std::size_t idx) {
        const auto& [i, j] = pairs[idx];
        pair_ok[idx] = schur_product(parts[i], parts[j]) == schur_product(parts[j], parts[i]);
    });

    std::vector<unsigned char> triple_ok(triples.size(), 0);
    for_each_index(triples.size(), exec, [&](std::size_t idx) {
        const Partition& a = parts[triples[idx][0]];
        const Partition& b = parts[triples[idx][1]];
        const Partition& c = parts[triples[idx][2]];
        SchurExpansion lhs = expansion_product(schur_product(a, b), c);
        // Right association spelled out so no commutativity is assumed:
        // sum over tau of c^tau_{b,c} * (s_a * s_tau).
        SchurExpansion rhs(lhs.degree());
        SchurExpansion inner = schur_product(b, c);
        for (const auto& [tau, m] : inner.terms()) {
            SchurExpansion left = schur_product(a, tau);
            for (const auto& [pi, m2] : left.terms())
                rhs.add(pi, checked_mul(m, m2));
        }
        triple_ok[idx] = lhs == rhs;
    });

    SweepStats stats = tally(pairs.size(), pair_ok);
    stats += tally(triples.size(), triple_ok);
    return stats;
}

SweepStats verify_first_row_bounds(unsigned max_total, Exec exec) {
    std::vector<Partition> parts = partitions_up_to(max_total);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (parts[i].size() + parts[j].size() <= max_total)
                pairs.emplace_back(i, j);

    std::vector<unsigned char> ok(pairs.size(), 0);
    for_each_index(pairs.size(), exec, [&](std::size_t idx) {
        const Partition& lam = parts[pairs[idx].first];
        const Partition& mu = parts[pairs[idx].second];
        Uint bound = static_cast<Uint>(lam.first()) + mu.first();
        // The row-wise sum of the two diagrams witnesses attainment.
        std::vector<unsigned> sums;
        for (std::size_t r = 0; r < std::max(lam.length(), mu.length()); ++r)
            sums.push_back(lam.part(r) + mu.part(r));
        Partition witness(std::move(sums));
        ok[idx] = max_attained_first_row(lam, mu) == bound &&
                  lr_coefficient(lam, mu, witness) > 0;
    });
    return tally(pairs.size(), ok);
}

SweepStats verify_restriction_bounds(unsigned max_d, unsigned max_size, Exec exec) {
    std::vector<Multipartition> items;
    for (unsigned d = 1; d <= max_d; ++d)
        for (unsigned s = 0; s <= max_size; ++s)
            for (Multipartition& mp : multipartitions_of(d, s))
                items.push_back(std::move(mp));

    std::vector<unsigned char> ok(items.size(), 0);
    for_each_index(items.size(), exec, [&](std::size_t idx) {
        const Multipartition& mp = items[idx];
        BranchingTable table = restriction_multiplicities(mp);
        Uint top = 0;
        Uint dim = 0;
        for (const auto& [nu, c] : table.terms()) {
            top = std::max<Uint>(top, nu.first());
            dim = checked_add(dim, checked_mul(c, count_standard_tableaux(nu)));
        }
        // top == alpha covers both directions of the first-part bound,
        // and the weighted dimension count must survive restriction.
        ok[idx] = top == alpha(mp) && dim == count_standard_d_tableaux(mp);
    });
    return tally(items.size(), ok);
}

namespace {

// Partitions contained in outer, row by row.
void subpartitions_into(const Partition& outer, std::size_t row,
                        std::vector<unsigned>& prefix, std::vector<Partition>& out) {
    if (row == outer.length()) {
        std::vector<unsigned> parts = prefix;
        while (!parts.empty() && parts.back() == 0)
            parts.pop_back();
        out.emplace_back(std::move(parts));
        return;
    }
    unsigned cap = outer.part(row);
    if (row > 0)
        cap = std::min(cap, prefix[row - 1]);
    for (unsigned v = 0; v <= cap; ++v) {
        prefix.push_back(v);
        subpartitions_into(outer, row + 1, prefix, out);
        prefix.pop_back();
    }
}

// Every semistandard filling of the shape with entries in {1..max_entry},
// all weights at once; each complete filling is fed to both checkers.
void sweep_fillings(const SkewShape& shape,
                    const std::vector<std::pair<std::size_t, unsigned>>& cells,
                    std::size_t at, std::vector<std::vector<unsigned>>& grid,
                    unsigned max_entry, SweepStats& stats) {
    if (at == cells.size()) {
        SkewTableau t(shape, grid);
        bool companion = is_lr_tableau(t);
        bool lattice = is_lr_tableau_lattice(t);
        // The topmost occupied row of a Littlewood-Richardson tableau
        // can only hold 1s; treat a violation as a checker failure.
        bool leading_ones = true;
        for (const auto& row : grid) {
            if (row.empty())
                continue;
            leading_ones = std::all_of(row.begin(), row.end(),
                                       [](unsigned e) { return e == 1; });
            break;
        }
        ++stats.cases;
        if (companion != lattice || (companion && !leading_ones))
            ++stats.failures;
        return;
    }
    const auto [r, c] = cells[at];
    unsigned lo = 1;
    if (c > shape.row_begin(r))
        lo = std::max(lo, grid[r].back());
    if (r > 0 && c >= shape.row_begin(r - 1) && c < shape.row_end(r - 1))
        lo = std::max(lo, grid[r - 1][c - shape.row_begin(r - 1)] + 1);
    for (unsigned v = lo; v <= max_entry; ++v) {
        grid[r].push_back(v);
        sweep_fillings(shape, cells, at + 1, grid, max_entry, stats);
        grid[r].pop_back();
    }
}

} // namespace

SweepStats verify_lr_checker_agreement(unsigned max_outer, Exec exec) {
    std::vector<SkewShape> shapes;
    for (unsigned s = 0; s <= max_outer; ++s)
        for (const Partition& outer : partitions_of(s)) {
            std::vector<Partition> inners;
            std::vector<unsigned> prefix;
            subpartitions_into(outer, 0, prefix, inners);
            for (Partition& inner : inners)
                shapes.emplace_back(outer, std::move(inner));
        }

    std::vector<SweepStats> per_shape(shapes.size());
    for_each_index(shapes.size(), exec, [&](std::size_t idx) {
        const SkewShape& shape = shapes[idx];
        std::vector<std::pair<std::size_t, unsigned>> cells;
        for (std::size_t r = 0; r < shape.rows(); ++r)
            for (unsigned c = shape.row_begin(r); c < shape.row_end(r); ++c)
                cells.emplace_back(r, c);
        std::vector<std::vector<unsigned>> grid(shape.rows());
        sweep_fillings(shape, cells, 0, grid, static_cast<unsigned>(shape.size()),
                       per_shape[idx]);
    });

    SweepStats stats;
    for (const SweepStats& s : per_shape)
        stats += s;
    return stats;
}

Uint group_algebra_dimension(unsigned d, unsigned n, Exec exec) {
    std::vector<Multipartition> labels = multipartitions_of(d, n);
    std::vector<Uint> squares(labels.size(), 0);
    for_each_index(labels.size(), exec, [&](std::size_t i) {
        Uint f = count_standard_d_tableaux(labels[i]);
        squares[i] = checked_mul(f, f);
    });
    Uint total = 0;
    for (Uint s : squares)
        total = checked_add(total, s);
    return total;
}

} // namespace ytl
