#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tableau_lab/enumeration.hpp"

using namespace tableau_lab;

namespace {

ContentVector ones(std::size_t n) { return ContentVector(std::vector<int>(n, 1)); }

const long long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};

}  // namespace

TEST_CASE("checked accumulator promotes instead of wrapping") {
    CheckedAccumulator<std::uint8_t> acc;
    for (int i = 0; i < 300; ++i) acc.add();
    CHECK(acc.promoted());
    CHECK(acc.value() == 300);
    acc.add(200);
    CHECK(acc.value() == 500);

    CheckedAccumulator<std::uint8_t> wide;
    wide.add(200);
    wide.add(200);
    CHECK(wide.value() == 400);

    CheckedAccumulator<> small;
    small.add();
    CHECK_FALSE(small.promoted());
    CHECK(small.value() == 1);
}

TEST_CASE("factorial and superfactorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigCount("2432902008176640000"));
    CHECK(superfactorial(0) == 1);
    CHECK(superfactorial(3) == 12);
    CHECK(superfactorial(4) == 288);
    CHECK_THROWS_AS(factorial(-1), DomainError);
}

TEST_CASE("kostka") {
    CHECK(kostka(RectShape(2, 3).diagram(), ones(6)) == 5);
    CHECK(oracles::count_ssyt_naive(RectShape(2, 3).diagram(), ones(6)) == 5);

    const ContentVector skew({2, 1, 1, 1, 1});
    CHECK(oracles::count_ssyt_naive(RectShape(3, 2).diagram(), skew) == 3);
    CHECK(kostka(RectShape(3, 2).diagram(), skew) == 3);

    CHECK(kostka(Diagram({4}), ones(4)) == 1);
    CHECK(kostka(Diagram(), ContentVector()) == 1);
    CHECK_THROWS_AS(kostka(Diagram({2}), ones(3)), DomainError);
}

TEST_CASE("pruned kostka agrees with the unpruned reference on small inputs") {
    for (const auto& shape : oracles::diagrams_in_box(3, 2)) {
        if (shape.cell_count() > 6) continue;
        // Every content over the values 1..4.
        const int total = static_cast<int>(shape.cell_count());
        for (int m1 = 0; m1 <= total; ++m1)
            for (int m2 = 0; m1 + m2 <= total; ++m2)
                for (int m3 = 0; m1 + m2 + m3 <= total; ++m3) {
                    const int m4 = total - m1 - m2 - m3;
                    const ContentVector content({m1, m2, m3, m4});
                    CHECK(kostka(shape, content) == oracles::count_ssyt_naive(shape, content));
                }
    }
}

TEST_CASE("count_syt_hook") {
    CHECK(count_syt_hook(RectShape(2, 4).diagram()) == 14);
    CHECK(count_syt_hook(Diagram({5})) == 1);  // single column
    CHECK(count_syt_hook(Diagram::from_row_lengths({5})) == 1);
    CHECK(enumerate_syt(Diagram::from_row_lengths({2, 1})).size() == 2);
    CHECK(count_syt_hook(Diagram::from_row_lengths({2, 1})) == 2);
    CHECK(count_syt_hook(Diagram()) == 1);
    for (int n = 1; n <= 8; ++n) CHECK(count_syt_hook(RectShape(2, n).diagram()) == kCatalan[n]);
}

TEST_CASE("rect_catalan") {
    for (int n = 1; n <= 8; ++n) CHECK(rect_catalan(n, 2) == kCatalan[n]);
    for (int m = 1; m <= 6; ++m) CHECK(rect_catalan(1, m) == 1);
    CHECK(rect_catalan(2, 3) == 5);
    CHECK(rect_catalan(4, 3) == 462);
    CHECK_THROWS_AS(rect_catalan(0, 2), DomainError);

    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n * m <= 12; ++m)
            CHECK(rect_catalan(n, m) == count_syt_hook(RectShape(n, m).diagram()));
}

TEST_CASE("enumerate_ssyt") {
    CHECK(enumerate_ssyt(RectShape(2, 2).diagram(), ones(4)).size() == 2);

    const auto three = enumerate_ssyt(RectShape(3, 2).diagram(), ContentVector({2, 1, 1, 1, 1}));
    REQUIRE(three.size() == 3);
    std::set<std::vector<int>> top_rows;
    for (const auto& t : three) top_rows.insert(t.rows().front());
    CHECK(top_rows == std::set<std::vector<int>>{{1, 1, 2}, {1, 1, 3}, {1, 1, 4}});

    const auto single = enumerate_ssyt(Diagram({1}), ones(1));
    REQUIRE(single.size() == 1);
    CHECK(single.front() == Tableau({{1}}));
}

TEST_CASE("enumeration is canonical, distinct and valid") {
    for (const auto& shape : oracles::diagrams_in_box(3, 3)) {
        const ContentVector content = ones(shape.cell_count());
        std::vector<std::vector<int>> words;
        for (const auto& t : enumerate_ssyt(shape, content)) {
            CHECK(classify_tableau(t) == Classification::Standard);
            CHECK(t.shape() == shape);
            CHECK(content_of(t) == content);
            std::vector<int> word;
            for (const auto& col : t.columns()) word.insert(word.end(), col.begin(), col.end());
            words.push_back(std::move(word));
        }
        CHECK(std::is_sorted(words.begin(), words.end()));
        CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
        CHECK(words.size() == kostka(shape, content));
    }
}

TEST_CASE("count_perm_class") {
    CHECK(count_perm_class(PermClass::LisAtMost, 4, 2) == 14);
    CHECK(count_perm_class(PermClass::LisAtMost, 4, 3) == 23);
    CHECK(count_perm_class(PermClass::LisPrefix, 4, 2) == 5);
    CHECK(count_perm_class(PermClass::LisPrefix, 3, 3) == 1);
    CHECK(count_perm_class(PermClass::BlockHead, 4, 2, 1) == 5);
    CHECK(count_perm_class(PermClass::DisjointLis, 4, 2, 1) == 5);
    CHECK_THROWS_AS(count_perm_class(PermClass::LisAtMost, 10, 2), ResourceError);
    CHECK(count_perm_class(PermClass::LisAtMost, 10, 1, 1, 10) == 1);
}

TEST_CASE("the five S_4 permutations with (1,2) as an LIS") {
    std::set<std::vector<int>> found;
    for_each_permutation(4, [&](const Permutation& sigma) {
        if (has_lis_prefix(sigma, 2)) found.insert(sigma.values());
    });
    CHECK(found == std::set<std::vector<int>>{
                       {3, 1, 4, 2}, {4, 1, 3, 2}, {4, 3, 1, 2}, {3, 4, 1, 2}, {1, 4, 3, 2}});
}

TEST_CASE("arc representation and crossings") {
    const ColoredArcPartition p{5, {{1, 3, 5}, {2, 4}}, {1, 1, 1}};
    const auto arcs = p.arcs();
    REQUIRE(arcs.size() == 3);
    CHECK(arcs[0] == ColoredArcPartition::Arc{1, 3});
    CHECK(arcs[1] == ColoredArcPartition::Arc{3, 5});
    CHECK(arcs[2] == ColoredArcPartition::Arc{2, 4});
    CHECK(arcs_cross(arcs[0], arcs[2]));
    CHECK(arcs_cross(arcs[2], arcs[1]));
    CHECK_FALSE(arcs_cross(arcs[0], arcs[1]));

    CHECK_FALSE(monochrome_noncrossing(p));
    CHECK(monochrome_noncrossing({5, {{1, 3, 5}, {2, 4}}, {1, 2, 2}}));
    CHECK_THROWS_AS(monochrome_noncrossing({5, {{1, 3, 5}, {2, 4}}, {1}}), ValidationError);
}

TEST_CASE("count_colored_noncrossing") {
    CHECK(count_colored_noncrossing(3, 1) == 5);
    CHECK(count_colored_noncrossing(2, 2) == 3);
    CHECK(count_colored_noncrossing(0, 1) == 1);
    CHECK(count_colored_noncrossing(0, 7) == 1);
    CHECK_THROWS_AS(count_colored_noncrossing(2, 0), DomainError);

    // Ordinary noncrossing partitions are Catalan-many.
    for (int n = 0; n <= 7; ++n) CHECK(count_colored_noncrossing(n, 1) == kCatalan[n]);

    for (int n = 0; n <= 5; ++n)
        for (int r = 1; r <= 3; ++r)
            CHECK(count_colored_noncrossing(n, r) == oracles::count_nc2_naive(n, r));
}

TEST_CASE("set partition enumeration matches Bell numbers") {
    const long long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
    for (int n = 0; n <= 7; ++n) {
        long long count = 0;
        std::set<std::vector<std::vector<int>>> seen;
        for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
            ++count;
            seen.insert(blocks);
            std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
            for (const auto& block : blocks)
                for (int e : block) {
                    CHECK(!hit[static_cast<std::size_t>(e)]);
                    hit[static_cast<std::size_t>(e)] = true;
                }
            for (int e = 1; e <= n; ++e) CHECK(hit[static_cast<std::size_t>(e)]);
        });
        CHECK(count == bell[n]);
        CHECK(static_cast<long long>(seen.size()) == count);
    }
}
