#include <doctest.h>

#include "oracles.hpp"
#include "tableau_lab/complement.hpp"
#include "tableau_lab/enumeration.hpp"

using namespace tableau_lab;

TEST_CASE("column_complement") {
    CHECK(column_complement(Column({2, 4}), 4) == Column({1, 3}));
    CHECK(column_complement(Column(), 3) == Column({1, 2, 3}));
    CHECK(column_complement(column_complement(Column({1, 3}), 5), 5) == Column({1, 3}));
    CHECK(column_complement(Column({1, 2, 3}), 3) == Column());
    CHECK(column_complement(Column(), 0) == Column());
    CHECK_THROWS_AS(column_complement(Column({5}), 4), DomainError);
}

TEST_CASE("column_precedes") {
    CHECK(column_precedes(Column({1, 2, 3}), Column({1, 3, 4})));
    CHECK_FALSE(column_precedes(Column({1, 2}), Column({1, 2, 3})));
    CHECK(column_precedes(Column({2, 5}), Column({2, 5})));
    CHECK_FALSE(column_precedes(Column({2, 5}), Column({1, 6})));
    CHECK(column_precedes(Column({1, 2, 9}), Column({3})));
}

TEST_CASE("adjacent columns of a semistandard tableau satisfy the column order") {
    for (const auto& shape : oracles::diagrams_in_box(3, 3)) {
        oracles::bounded_ssyt(shape, 4, [&](const Tableau& t) {
            REQUIRE(is_semistandard(t));
            for (int i = 0; i + 1 < t.width(); ++i)
                CHECK(column_precedes(Column(t.column(i)), Column(t.column(i + 1))));
        });
    }
}

TEST_CASE("column complement reverses the column order") {
    const int n = 5;
    std::vector<Column> columns;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> entries;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) entries.push_back(v);
        columns.push_back(Column(entries));
    }
    for (const auto& u : columns) {
        for (const auto& v : columns) {
            if (!column_precedes(u, v)) continue;
            CHECK(column_precedes(column_complement(v, n), column_complement(u, n)));
        }
    }
}

TEST_CASE("tableau_complement") {
    const Tableau p = Tableau::from_rows({{1, 1, 2}, {2, 3, 4}, {3, 4}});
    const Tableau comp = tableau_complement(p, 3, 4);
    CHECK(comp == Tableau::from_rows({{1, 2, 4}, {3}}));
    CHECK(tableau_complement(comp, 3, 4) == p);

    CHECK(tableau_complement(Tableau(), 2, 3) == Tableau({{1, 2, 3}, {1, 2, 3}}));
    CHECK_THROWS_AS(tableau_complement(p, 3, 3), DomainError);   // entry 4 outside [3]
    CHECK_THROWS_AS(tableau_complement(p, 2, 4), DomainError);   // wider than w
}

TEST_CASE("tableau complement is a shape-reversing involution") {
    const int w = 3, n = 4;
    for (const auto& shape : oracles::diagrams_in_box(w, n)) {
        oracles::bounded_ssyt(shape, n, [&](const Tableau& t) {
            const Tableau comp = tableau_complement(t, w, n);
            CHECK(is_semistandard(comp));
            CHECK(tableau_complement(comp, w, n) == t);
        });
    }
}

TEST_CASE("complement of a rectangle-minus-lambda filling has shape lambda") {
    const RectShape box(3, 4);
    for (const auto& lambda : oracles::diagrams_in_box(3, 4)) {
        const Diagram rest = rect_subtract_shape(box, lambda);
        oracles::bounded_ssyt(rest, 4, [&](const Tableau& a) {
            CHECK(tableau_complement(a, 3, 4).shape() == lambda);
        });
    }
}

TEST_CASE("complement of an evenly weighted filling covers the ground set once") {
    // Shapes □(w,n) − λ with content w−1 copies of each of 1..n−k complement
    // to exactly one copy of each value.
    struct Grid { int w, n, k; };
    for (const Grid g : {Grid{2, 3, 0}, Grid{3, 4, 1}, Grid{2, 4, -1}, Grid{3, 3, 0}}) {
        std::vector<int> weight(static_cast<std::size_t>(g.n - g.k), g.w - 1);
        const ContentVector content{std::move(weight)};
        for (const auto& lambda : oracles::diagrams_in_box(g.w, g.n)) {
            if (lambda.cell_count() != static_cast<std::size_t>(g.n + g.k * (g.w - 1))) continue;
            const Diagram rest = rect_subtract_shape(RectShape(g.w, g.n), lambda);
            if (rest.cell_count() != content.sum()) continue;
            for (const auto& a : enumerate_ssyt(rest, content)) {
                const Tableau comp = tableau_complement(a, g.w, g.n - g.k);
                std::vector<int> expected(static_cast<std::size_t>(g.n - g.k), 1);
                CHECK(content_of(comp) == ContentVector(expected));
            }
        }
    }
}
