#include <doctest.h>

#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "pascalian/combinatorics.hpp"
#include "pascalian/errors.hpp"

using namespace pascalian;

TEST_CASE("pascalian_number examples") {
    CHECK(pascalian_number(4, 0) == 6);
    CHECK(pascalian_number(5, 5) == 1);
    CHECK(pascalian_number(5, 4) == 1);
    CHECK(pascalian_number(12, 4) == oracle::height_counts(12)[4]);
    CHECK(pascalian_number(12, 4) == 495);
    CHECK_THROWS_AS(pascalian_number(3, 4), DomainError);
    CHECK_THROWS_AS(pascalian_number(3, -1), DomainError);
}

TEST_CASE("pascalian_number matches the sorted Pascal row") {
    for (int n = 0; n <= 60; ++n) {
        const auto expected = oracle::sorted_pascal_row(n);
        for (int k = 0; k <= n; ++k) REQUIRE(pascalian_number(n, k) == expected[k]);
    }
}

TEST_CASE("pascalian recursion up to n = 200") {
    for (int n = 2; n <= 200; ++n) {
        for (int k = 1; k < n - 1; ++k) {
            REQUIRE(pascalian_number(n, k) == pascalian_number(n - 1, k - 1) + pascalian_number(n - 1, k + 1));
        }
        REQUIRE(pascalian_number(n, 0) == pascalian_number(n - 1, 0) + pascalian_number(n - 1, 1));
        REQUIRE(pascalian_number(n, n) == 1);
        REQUIRE(pascalian_number(n, n - 1) == 1);
    }
}

TEST_CASE("triangle_row") {
    CHECK(triangle_row(5) == std::vector<BigInt>{10, 10, 5, 5, 1, 1});
    CHECK(triangle_row(0) == std::vector<BigInt>{1});
    BigInt sum = 0;
    BigInt squares = 0;
    for (const auto& v : triangle_row(8)) {
        sum += v;
        squares += v * v;
    }
    CHECK(sum == 256);
    CHECK(squares == 12870);
    CHECK(squares == oracle::binom(16, 8));
}

TEST_CASE("shape_of") {
    CHECK(shape_of(Tableau(2, {1, 2})) == Shape{4, 0});
    CHECK(shape_of(Tableau(2, {})) == Shape{2, 2});
    CHECK(shape_of(Tableau(1, {})) == Shape{1, 1});
    CHECK(shape_of(Tableau(2, {2})) == Shape{3, 1});
    CHECK_THROWS_AS(Tableau(2, {3}), DomainError);
    CHECK_THROWS_AS(Tableau(2, {1, 1}), DomainError);
    CHECK_THROWS_AS(Tableau(0, {}), DomainError);
}

TEST_CASE("shape_of agrees with the insertion oracle") {
    for (int n = 1; n <= 10; ++n) {
        for (const auto& t : enumerate_tableaux(n)) {
            std::vector<bool> bits;
            for (int s = 1; s <= n; ++s) bits.push_back(t.is_horizontal_in_first_row(s));
            const auto [a, b] = oracle::domino_shape(bits);
            const Shape sh = shape_of(t);
            REQUIRE(sh.first == a);
            REQUIRE(sh.second == b);
            REQUIRE(sh.first + sh.second == 2 * n);
            REQUIRE(sh.first >= sh.second);
            REQUIRE((sh.first - sh.second) % 2 == 0);
        }
    }
}

TEST_CASE("partial shapes grow by one domino") {
    const Tableau t(5, {2, 3, 5});
    const auto shapes = t.partial_shapes();
    REQUIRE(shapes.size() == 5);
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        CHECK(shapes[i].first + shapes[i].second == 2 * static_cast<int>(i + 1));
    }
    CHECK(shapes.back() == shape_of(t));
}

TEST_CASE("walk_height") {
    CHECK(walk_height(Walk::parse("DD")) == 0);
    CHECK(walk_height(Walk::parse("UU")) == 2);
    CHECK(walk_height(Walk::parse("UDDDUU")) == 1);
    CHECK(walk_height(Walk::parse("")) == 0);
    CHECK(walk_height(Walk::parse("1001")) == 1);
    CHECK_THROWS_AS(Walk::parse("UXD"), DomainError);
}

TEST_CASE("phi examples") {
    CHECK(phi(Tableau(2, {1, 2})).to_string() == "UU");
    CHECK(phi(Tableau(2, {})).to_string() == "DD");
    CHECK(phi(Tableau(2, {2})).to_string() == "UD");
    CHECK(walk_height(phi(Tableau(2, {2}))) == 1);
}

TEST_CASE("enumerate_tableaux") {
    const auto b2 = enumerate_tableaux(2);
    REQUIRE(b2.size() == 4);
    std::multiset<Shape> shapes;
    for (const auto& t : b2) shapes.insert(shape_of(t));
    CHECK(shapes == std::multiset<Shape>{{2, 2}, {2, 2}, {3, 1}, {4, 0}});
    CHECK(enumerate_tableaux(1).size() == 2);

    const auto b10 = enumerate_tableaux(10);
    CHECK(b10.size() == 1024);
    int level = 0;
    for (const auto& t : b10) level += shape_of(t) == Shape{10, 10};
    CHECK(level == 252);

    for (std::size_t i = 1; i < b10.size(); ++i) {
        REQUIRE(b10[i - 1].horizontal_labels() < b10[i].horizontal_labels());
    }
    CHECK_THROWS_AS(enumerate_tableaux(15), ResourceError);
    CHECK_THROWS_AS(enumerate_tableaux(5, 4), ResourceError);
    CHECK_THROWS_AS(enumerate_tableaux(0), DomainError);
}

TEST_CASE("phi is a statistic-preserving bijection") {
    for (int n = 1; n <= 12; ++n) {
        std::set<Walk> seen;
        for (const auto& t : enumerate_tableaux(n)) {
            const Walk w = phi(t);
            const Shape sh = shape_of(t);
            const int h = walk_height(w);
            REQUIRE(w.size() == n);
            REQUIRE(sh == Shape{n + h, n - h});
            REQUIRE(w.up_count() == static_cast<int>(t.horizontal_labels().size()));
            REQUIRE((sh.first == sh.second) == (h == 0));
            for (int s = 1; s <= n; ++s) REQUIRE(w.is_up(n + 1 - s) == t.is_horizontal_in_first_row(s));
            seen.insert(w);
        }
        REQUIRE(seen.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("height_histogram") {
    CHECK(height_histogram(2) == std::vector<BigInt>{2, 1, 1});
    CHECK(height_histogram(1) == std::vector<BigInt>{1, 1});
    for (int n = 1; n <= 14; ++n) {
        REQUIRE(height_histogram(n) == triangle_row(n));
        REQUIRE(height_histogram(n) == oracle::height_counts(n));
    }
}

TEST_CASE("enumeration cap override") {
    ::setenv("PASCALIAN_CAP", "16", 1);
    CHECK(enumeration_cap() == 16);
    CHECK(height_histogram(15).size() == 16);
    ::setenv("PASCALIAN_CAP", "junk", 1);
    CHECK_THROWS_AS(enumeration_cap(), DomainError);
    ::unsetenv("PASCALIAN_CAP");
    CHECK(enumeration_cap() == kDefaultEnumerationCap);
}
