#include "doctest.h"
#include "oracles.hpp"

#include "ytl/tableaux.hpp"

using namespace ytl;

namespace {

// The running example: shape (4,3,2)/(2,1) with weight (3,2,1).
const SkewShape example_shape(Partition{4, 3, 2}, Partition{2, 1});

SkewTableau t1() { return SkewTableau(example_shape, {{1, 1}, {1, 2}, {2, 3}}); }
SkewTableau t2() { return SkewTableau(example_shape, {{1, 1}, {2, 2}, {1, 3}}); }
SkewTableau t3() { return SkewTableau(example_shape, {{1, 2}, {1, 2}, {1, 3}}); }

// Partitions contained in outer, smallest-first is not needed; any
// complete enumeration will do for the oracle sweeps.
void subpartitions(const Partition& outer, std::size_t row, std::vector<unsigned>& prefix,
                   std::vector<Partition>& out) {
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
        subpartitions(outer, row + 1, prefix, out);
        prefix.pop_back();
    }
}

// All weight vectors with the given total and exactly `slots` counts.
void compositions(unsigned total, unsigned slots, std::vector<unsigned>& prefix,
                  std::vector<std::vector<unsigned>>& out) {
    if (slots == 1) {
        prefix.push_back(total);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned v = 0; v <= total; ++v) {
        prefix.push_back(v);
        compositions(total - v, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

TEST_CASE("weight basics") {
    Weight w{3, 2, 1};
    CHECK(w.counts() == std::vector<unsigned>{3, 2, 1});
    CHECK(w.count(1) == 3);
    CHECK(w.count(3) == 1);
    CHECK(w.count(4) == 0);
    CHECK(w.max_value() == 3);
    CHECK(w.total() == 6);

    // Trailing zeros are trimmed, so the multiset determines the value.
    CHECK(Weight{3, 2, 1, 0, 0} == w);
    CHECK(Weight{0, 0} == Weight{});
    CHECK(Weight{}.total() == 0);
    CHECK(Weight{}.max_value() == 0);

    CHECK(w.is_partition());
    CHECK(w.to_partition() == Partition{3, 2, 1});
    CHECK(Weight{}.is_partition());
    CHECK(Weight{}.to_partition() == Partition{});
    CHECK_FALSE(Weight{0, 1}.is_partition());
    CHECK_FALSE(Weight{1, 2}.is_partition());
    CHECK_THROWS_AS(Weight({1, 2}).to_partition(), InvalidArgument);
}

TEST_CASE("skew tableau construction and entry lookup") {
    SkewTableau t = t1();
    CHECK(t.size() == 6);
    CHECK(t.rows().size() == 3);
    CHECK(t.entry_at(0, 2) == 1);
    CHECK(t.entry_at(0, 3) == 1);
    CHECK(t.entry_at(0, 0) == 0); // cell removed by the inner shape
    CHECK(t.entry_at(1, 1) == 1);
    CHECK(t.entry_at(2, 1) == 3);
    CHECK(t.entry_at(2, 2) == 0); // outside the outer shape
    CHECK(t.entry_at(5, 0) == 0);

    CHECK_THROWS_AS(SkewTableau(example_shape, {{1, 1}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(SkewTableau(example_shape, {{1}, {1, 2}, {2, 3}}), InvalidArgument);
    CHECK_THROWS_AS(SkewTableau(example_shape, {{1, 0}, {1, 2}, {2, 3}}), InvalidArgument);

    // Entries are not capped by the box count; only positivity is
    // structural (a single box may hold a 7).
    SkewTableau big(SkewShape(Partition{1}, Partition{}), {{7}});
    CHECK(weight_of(big).count(7) == 1);
}

TEST_CASE("semistandard predicate") {
    CHECK(is_semistandard(t1()));
    CHECK(is_semistandard(t2()));
    CHECK(is_semistandard(t3()));

    SkewShape straight2(Partition{2}, Partition{});
    CHECK(is_semistandard(SkewTableau(straight2, {{1, 1}})));
    CHECK_FALSE(is_semistandard(SkewTableau(straight2, {{2, 1}})));

    SkewShape column2(Partition{1, 1}, Partition{});
    CHECK(is_semistandard(SkewTableau(column2, {{1}, {2}})));
    CHECK_FALSE(is_semistandard(SkewTableau(column2, {{1}, {1}})));

    // Column strictness applies only where the rows overlap: in
    // (2,2)/(1) the second column is shared, the first is not.
    SkewShape hook(Partition{2, 2}, Partition{1});
    CHECK(is_semistandard(SkewTableau(hook, {{2}, {1, 3}})));
    CHECK_FALSE(is_semistandard(SkewTableau(hook, {{1}, {1, 1}})));
    CHECK_FALSE(is_semistandard(SkewTableau(hook, {{2}, {1, 2}})));

    SkewShape offset(Partition{2, 2}, Partition{2});
    CHECK(is_semistandard(SkewTableau(offset, {{}, {1, 1}})));

    CHECK(is_semistandard(SkewTableau(SkewShape(Partition{}, Partition{}), {})));
}

TEST_CASE("weights of the example fillings") {
    CHECK(weight_of(t1()) == Weight{3, 2, 1});
    CHECK(weight_of(t2()) == Weight{3, 2, 1});
    CHECK(weight_of(t3()) == Weight{3, 2, 1});
    CHECK(weight_of(SkewTableau(SkewShape(Partition{1}, Partition{}), {{2}})) ==
          Weight{0, 1});
    CHECK(weight_of(SkewTableau(SkewShape(Partition{}, Partition{}), {})) == Weight{});
}

TEST_CASE("entry counts per row") {
    SkewTableau t = t1();
    CHECK(entry_count(t, 1, 1) == 2);
    CHECK(entry_count(t, 2, 1) == 1);
    CHECK(entry_count(t, 2, 2) == 1);
    CHECK(entry_count(t, 3, 2) == 1);
    CHECK(entry_count(t, 3, 3) == 1);
    CHECK(entry_count(t, 1, 2) == 0);
    CHECK(entry_count(t, 4, 1) == 0); // row out of range
}

TEST_CASE("companion construction") {
    // The companion of T1 swaps row indices with entries.
    SkewTableau companion1(SkewShape(Partition{3, 2, 1}, Partition{}),
                           {{1, 1, 2}, {2, 3}, {3}});
    CHECK(is_companion(t1(), companion1));
    CHECK(is_companion(companion1, t1()));
    CHECK_FALSE(is_companion(t2(), companion1));

    auto candidate1 = companion_candidate(t1());
    REQUIRE(candidate1.has_value());
    CHECK(*candidate1 == companion1);
    CHECK(is_semistandard(*candidate1));

    // T3's candidate exists (its weight is a partition) but fails to be
    // semistandard: that is exactly why T3 is not Littlewood-Richardson.
    auto candidate3 = companion_candidate(t3());
    REQUIRE(candidate3.has_value());
    CHECK(*candidate3 == SkewTableau(SkewShape(Partition{3, 2, 1}, Partition{}),
                                     {{1, 2, 3}, {1, 2}, {3}}));
    CHECK_FALSE(is_semistandard(*candidate3));

    // Non-partition weight: no candidate at all.
    SkewTableau lone2(SkewShape(Partition{1}, Partition{}), {{2}});
    CHECK_FALSE(companion_candidate(lone2).has_value());
}

TEST_CASE("Littlewood-Richardson predicate on the example") {
    CHECK(is_lr_tableau(t1()));
    CHECK(is_lr_tableau(t2()));
    CHECK_FALSE(is_lr_tableau(t3()));

    CHECK(is_lr_tableau_lattice(t1()));
    CHECK(is_lr_tableau_lattice(t2()));
    CHECK_FALSE(is_lr_tableau_lattice(t3()));

    SkewTableau not_ssyt(SkewShape(Partition{2}, Partition{}), {{2, 1}});
    CHECK_THROWS_AS(is_lr_tableau(not_ssyt), NotSemistandard);
    CHECK_THROWS_AS(is_lr_tableau_lattice(not_ssyt), NotSemistandard);

    // The empty tableau is trivially Littlewood-Richardson.
    SkewTableau empty(SkewShape(Partition{}, Partition{}), {});
    CHECK(is_lr_tableau(empty));
    CHECK(is_lr_tableau_lattice(empty));
}

TEST_CASE("enumerate_ssyt reproduces the example, in row-major lex order") {
    std::vector<SkewTableau> all = enumerate_ssyt(example_shape, Weight{3, 2, 1});
    REQUIRE(all.size() == 6);
    CHECK(all[0] == t1());
    CHECK(all[1] == SkewTableau(example_shape, {{1, 1}, {1, 3}, {2, 2}}));
    CHECK(all[2] == t2());
    CHECK(all[3] == t3());
    CHECK(all[4] == SkewTableau(example_shape, {{1, 2}, {1, 3}, {1, 2}}));
    CHECK(all[5] == SkewTableau(example_shape, {{1, 3}, {1, 2}, {1, 2}}));

    unsigned lr = 0;
    for (const SkewTableau& t : all)
        lr += is_lr_tableau(t) ? 1 : 0;
    CHECK(lr == 2);

    CHECK_THROWS_AS(enumerate_ssyt(example_shape, Weight{3, 2}), SizeMismatch);
    CHECK_THROWS_AS(enumerate_ssyt(SkewShape(Partition{2}, Partition{}), Weight{3}),
                    SizeMismatch);
}

TEST_CASE("enumerate_ssyt edge shapes") {
    // Empty shape, empty weight: exactly the empty filling.
    std::vector<SkewTableau> none =
        enumerate_ssyt(SkewShape(Partition{}, Partition{}), Weight{});
    REQUIRE(none.size() == 1);
    CHECK(none[0].rows().empty());

    // A column cannot repeat entries.
    CHECK(enumerate_ssyt(SkewShape(Partition{1, 1}, Partition{}), Weight{2}).empty());
    CHECK(enumerate_ssyt(SkewShape(Partition{1, 1}, Partition{}), Weight{1, 1}).size() == 1);

    // Weight with an unused low value still counts correctly.
    std::vector<SkewTableau> shifted =
        enumerate_ssyt(SkewShape(Partition{1}, Partition{}), Weight{0, 1});
    REQUIRE(shifted.size() == 1);
    CHECK(shifted[0].rows() == std::vector<std::vector<unsigned>>{{2}});
}

TEST_CASE("enumerate_ssyt agrees with the brute-force oracle") {
    // Sweep every skew shape with at most 5 boxes in the outer shape and
    // every weight of the right total; compare the full ordered lists.
    for (unsigned s = 0; s <= 5; ++s)
        for (const Partition& outer : partitions_of(s)) {
            std::vector<Partition> inners;
            std::vector<unsigned> prefix;
            subpartitions(outer, 0, prefix, inners);
            for (const Partition& inner : inners) {
                SkewShape shape(outer, inner);
                unsigned m = static_cast<unsigned>(shape.size());
                std::vector<std::vector<unsigned>> weights;
                std::vector<unsigned> wprefix;
                compositions(m, m + 1, wprefix, weights);
                for (const std::vector<unsigned>& w : weights) {
                    std::vector<SkewTableau> got = enumerate_ssyt(shape, Weight(w));
                    std::vector<oracle::Grid> want =
                        oracle::semistandard_fillings(outer.parts(), inner.parts(), w);
                    REQUIRE(got.size() == want.size());
                    for (std::size_t i = 0; i < got.size(); ++i)
                        CHECK(got[i].rows() == want[i]);
                }
            }
        }
}

TEST_CASE("standard tableau counts via hook lengths") {
    CHECK(count_standard_tableaux(Partition{}) == 1);
    CHECK(count_standard_tableaux(Partition{5}) == 1);
    CHECK(count_standard_tableaux(Partition(std::vector<unsigned>(5, 1))) == 1);
    CHECK(count_standard_tableaux(Partition{2, 1}) == 2);
    CHECK(count_standard_tableaux(Partition{3, 2}) == 5);
    CHECK(count_standard_tableaux(Partition{2, 2, 1}) == 5);
    CHECK(count_standard_tableaux(Partition{4, 2}) == 9);
    CHECK(count_standard_tableaux(Partition{3, 3, 3}) == 42);

    for (unsigned n = 0; n <= 7; ++n)
        for (const Partition& p : partitions_of(n))
            CHECK(count_standard_tableaux(p) ==
                  oracle::standard_d_tableaux({p.parts()}));
}

TEST_CASE("standard d-tableau counts") {
    CHECK(count_standard_d_tableaux(Multipartition{Partition{}}) == 1);
    CHECK(count_standard_d_tableaux(Multipartition{Partition{}, Partition{}}) == 1);
    CHECK(count_standard_d_tableaux(Multipartition{Partition{1, 1}, Partition{2}}) == 6);
    CHECK(count_standard_d_tableaux(Multipartition{Partition{1}, Partition{1, 1}}) == 3);
    CHECK(count_standard_d_tableaux(Multipartition{Partition{2, 1}, Partition{1}}) == 8);

    for (unsigned d = 1; d <= 3; ++d)
        for (unsigned n = 0; n <= 5; ++n)
            for (const Multipartition& mp : multipartitions_of(d, n)) {
                std::vector<std::vector<unsigned>> shapes;
                for (const Partition& comp : mp.components())
                    shapes.push_back(comp.parts());
                CHECK(count_standard_d_tableaux(mp) ==
                      oracle::standard_d_tableaux(shapes));
            }
}

TEST_CASE("weight parsing") {
    CHECK(parse_weight("") == Weight{});
    CHECK(parse_weight("0") == Weight{});
    CHECK(parse_weight("3,2,1") == Weight{3, 2, 1});
    CHECK(parse_weight("0,1") == Weight{0, 1});
    CHECK(parse_weight("2,0,1") == Weight{2, 0, 1});
    CHECK(parse_weight("3,2,1,0") == Weight{3, 2, 1});

    CHECK_THROWS_AS(parse_weight("01"), ParseError);
    CHECK_THROWS_AS(parse_weight("1,"), ParseError);
    CHECK_THROWS_AS(parse_weight(",1"), ParseError);
    CHECK_THROWS_AS(parse_weight("x"), ParseError);
    CHECK_THROWS_AS(parse_weight("-1"), ParseError);
    CHECK_THROWS_AS(parse_weight("1 2"), ParseError);
}
