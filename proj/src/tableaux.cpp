#include "ytl/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace ytl {

Weight::Weight(std::vector<unsigned> counts) : counts_(std::move(counts)) {
    while (!counts_.empty() && counts_.back() == 0)
        counts_.pop_back();
    for (unsigned c : counts_)
        total_ = checked_add(total_, c);
}

Weight::Weight(std::initializer_list<unsigned> counts)
    : Weight(std::vector<unsigned>(counts)) {}

bool Weight::is_partition() const {
    // trailing zeros are already trimmed, so weakly decreasing suffices
    for (std::size_t i = 0; i + 1 < counts_.size(); ++i)
        if (counts_[i] < counts_[i + 1])
            return false;
    return true;
}

Partition Weight::to_partition() const {
    if (!is_partition())
        throw InvalidArgument("weight is not weakly decreasing");
    return Partition(counts_);
}

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<unsigned>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.rows())
        throw InvalidArgument("tableau row count does not match its shape");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != shape_.row_length(r))
            throw InvalidArgument("tableau row length does not match its shape");
        for (unsigned e : rows_[r])
            if (e == 0)
                throw InvalidArgument("tableau entries must be positive");
    }
}

unsigned SkewTableau::entry_at(std::size_t row, unsigned col) const {
    if (row >= rows_.size())
        return 0;
    if (col < shape_.row_begin(row) || col >= shape_.row_end(row))
        return 0;
    return rows_[row][col - shape_.row_begin(row)];
}

bool is_semistandard(const SkewTableau& t) {
    const SkewShape& s = t.shape();
    for (std::size_t r = 0; r < s.rows(); ++r) {
        const auto& row = t.rows()[r];
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] > row[j + 1])
                return false;
        if (r + 1 < s.rows()) {
            // inner parts weakly decrease, so the overlap is an interval
            unsigned lo = std::max(s.row_begin(r), s.row_begin(r + 1));
            unsigned hi = std::min(s.row_end(r), s.row_end(r + 1));
            for (unsigned c = lo; c < hi; ++c)
                if (t.entry_at(r, c) >= t.entry_at(r + 1, c))
                    return false;
        }
    }
    return true;
}

Weight weight_of(const SkewTableau& t) {
    unsigned max_entry = 0;
    for (const auto& row : t.rows())
        for (unsigned e : row)
            max_entry = std::max(max_entry, e);
    std::vector<unsigned> counts(max_entry, 0);
    for (const auto& row : t.rows())
        for (unsigned e : row)
            ++counts[e - 1];
    return Weight(std::move(counts));
}

Uint entry_count(const SkewTableau& t, unsigned row, unsigned value) {
    if (row == 0 || row > t.rows().size())
        return 0;
    const auto& cells = t.rows()[row - 1];
    return static_cast<Uint>(std::count(cells.begin(), cells.end(), value));
}

namespace {

unsigned max_entry_of(const SkewTableau& t) {
    unsigned m = 0;
    for (const auto& row : t.rows())
        for (unsigned e : row)
            m = std::max(m, e);
    return m;
}

} // namespace

bool is_companion(const SkewTableau& a, const SkewTableau& b) {
    unsigned extent = std::max(
        std::max<unsigned>(static_cast<unsigned>(a.rows().size()), max_entry_of(a)),
        std::max<unsigned>(static_cast<unsigned>(b.rows().size()), max_entry_of(b)));
    for (unsigned k = 1; k <= extent; ++k)
        for (unsigned l = 1; l <= extent; ++l)
            if (entry_count(a, k, l) != entry_count(b, l, k))
                return false;
    return true;
}

std::optional<SkewTableau> companion_candidate(const SkewTableau& t) {
    Weight w = weight_of(t);
    if (!w.is_partition())
        return std::nullopt;
    // Row l of the companion records, in increasing order, the rows of t
    // that hold the entries l.
    std::vector<std::vector<unsigned>> rows(w.counts().size());
    for (unsigned l = 1; l <= w.max_value(); ++l)
        for (unsigned k = 1; k <= t.rows().size(); ++k) {
            Uint reps = entry_count(t, k, l);
            rows[l - 1].insert(rows[l - 1].end(), static_cast<std::size_t>(reps), k);
        }
    return SkewTableau(SkewShape(w.to_partition(), Partition{}), std::move(rows));
}

bool is_lr_tableau(const SkewTableau& t) {
    if (!is_semistandard(t))
        throw NotSemistandard("Littlewood-Richardson test needs a semistandard tableau");
    std::optional<SkewTableau> companion = companion_candidate(t);
    return companion && is_semistandard(*companion);
}

bool is_lr_tableau_lattice(const SkewTableau& t) {
    if (!is_semistandard(t))
        throw NotSemistandard("Littlewood-Richardson test needs a semistandard tableau");
    // Read rows top to bottom, each right to left; every prefix must
    // contain at least as many i as i+1.
    std::vector<Uint> seen(max_entry_of(t) + 1, 0);
    for (const auto& row : t.rows())
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            unsigned v = *it;
            ++seen[v - 1];
            if (v > 1 && seen[v - 1] > seen[v - 2])
                return false;
        }
    return true;
}

namespace {

struct Cell {
    std::size_t row;
    unsigned col;
};

void fill_cells(const SkewShape& shape, const std::vector<Cell>& cells, std::size_t at,
                std::vector<std::vector<unsigned>>& grid, std::vector<unsigned>& remaining,
                std::vector<SkewTableau>& out) {
    if (at == cells.size()) {
        out.push_back(SkewTableau(shape, grid));
        return;
    }
    auto [r, c] = cells[at];
    unsigned lo = 1;
    if (c > shape.row_begin(r))
        lo = std::max(lo, grid[r][c - shape.row_begin(r) - 1]);
    if (r > 0 && c >= shape.row_begin(r - 1) && c < shape.row_end(r - 1))
        lo = std::max(lo, grid[r - 1][c - shape.row_begin(r - 1)] + 1);
    for (unsigned e = lo; e <= remaining.size(); ++e) {
        if (remaining[e - 1] == 0)
            continue;
        --remaining[e - 1];
        grid[r][c - shape.row_begin(r)] = e;
        fill_cells(shape, cells, at + 1, grid, remaining, out);
        ++remaining[e - 1];
    }
    grid[r][c - shape.row_begin(r)] = 0;
}

} // namespace

std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, const Weight& weight) {
    if (weight.total() != shape.size())
        throw SizeMismatch("weight total must equal the number of boxes");
    std::vector<Cell> cells;
    for (std::size_t r = 0; r < shape.rows(); ++r)
        for (unsigned c = shape.row_begin(r); c < shape.row_end(r); ++c)
            cells.push_back(Cell{r, c});
    std::vector<std::vector<unsigned>> grid(shape.rows());
    for (std::size_t r = 0; r < shape.rows(); ++r)
        grid[r].assign(shape.row_length(r), 0);
    std::vector<unsigned> remaining = weight.counts();
    std::vector<SkewTableau> out;
    fill_cells(shape, cells, 0, grid, remaining, out);
    return out;
}

Uint count_standard_tableaux(const Partition& p) {
    unsigned n = static_cast<unsigned>(p.size());
    // conjugate part lengths give the column heights
    std::vector<unsigned> col_height(p.first(), 0);
    for (std::size_t i = 0; i < p.length(); ++i)
        for (unsigned j = 0; j < p.parts()[i]; ++j)
            ++col_height[j];
    std::vector<Uint> hooks;
    hooks.reserve(n);
    for (std::size_t i = 0; i < p.length(); ++i)
        for (unsigned j = 0; j < p.parts()[i]; ++j)
            hooks.push_back((p.parts()[i] - j) + (col_height[j] - i) - 1);
    // n! / prod(hooks) with stepwise gcd reduction; one hook per factor
    // keeps the intermediates near the final value.
    Uint num = 1, den = 1;
    for (unsigned k = 1; k <= n; ++k) {
        num = checked_mul(num, k);
        den = checked_mul(den, hooks[k - 1]);
        Uint g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

Uint count_standard_d_tableaux(const Multipartition& mp) {
    std::vector<unsigned> sizes;
    sizes.reserve(mp.tuple_length());
    for (const Partition& p : mp.components())
        sizes.push_back(static_cast<unsigned>(p.size()));
    Uint result = multinomial(static_cast<unsigned>(mp.size()), sizes);
    for (const Partition& p : mp.components())
        result = checked_mul(result, count_standard_tableaux(p));
    return result;
}

Weight parse_weight(std::string_view text) {
    if (text.empty())
        return Weight{};
    std::vector<unsigned> counts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find(',', start);
        std::string_view token =
            text.substr(start, pos == std::string_view::npos ? pos : pos - start);
        if (token.empty())
            throw ParseError("empty count in weight text");
        if (token.size() > 1 && token[0] == '0')
            throw ParseError("weight counts must not have leading zeros");
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError("not a nonnegative integer: '" + std::string(token) + "'");
        counts.push_back(value);
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return Weight(std::move(counts));
}

} // namespace ytl
