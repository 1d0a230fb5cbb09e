#include <catch_amalgamated.hpp>

#include <set>

#include <rbmtrop/cube.hpp>

using namespace rbmtrop;

namespace {

VertexSet set_of(int n, std::initializer_list<const char*> bits)
{
    VertexSet s(n);
    for (const char* b : bits) s.insert(parse_vertex(b));
    return s;
}

// Positive sets realized by integer weights in [-w, w] and half-integer thresholds.
std::set<VertexSet> integer_weight_oracle(int n, int w)
{
    std::set<VertexSet> out;
    std::vector<int> omega(static_cast<std::size_t>(n), -w);
    for (;;) {
        int lo = 0, hi = 0;
        for (int x : omega) (x < 0 ? lo : hi) += x;
        for (int twice_c = 2 * (-hi) - 1; twice_c <= 2 * (-lo) + 1; twice_c += 2) {
            VertexSet s(n);
            for (Vertex v = 0; v < vertex_count(n); ++v) {
                int dotv = 0;
                for (int j = 0; j < n; ++j) dotv += omega[j] * coordinate(v, j, n);
                if (2 * dotv + twice_c > 0) s.insert(v);
            }
            out.insert(s);
        }
        int j = 0;
        while (j < n && omega[j] == w) omega[j++] = -w;
        if (j == n) break;
        ++omega[j];
    }
    return out;
}

}  // namespace

TEST_CASE("vertex convention: first coordinate is the leftmost bit")
{
    CHECK(vertex_count(3) == 8);
    CHECK(parse_vertex("100") == 4);
    CHECK(vertex_string(1, 3) == "001");
    CHECK(coordinate(parse_vertex("100"), 0, 3) == 1);
    CHECK(coordinate(parse_vertex("100"), 2, 3) == 0);
    CHECK(homogenized_vertex(parse_vertex("101"), 3) == RationalVector{1, 1, 0, 1});
    CHECK_THROWS_AS(parse_vertex("10a"), std::invalid_argument);
    CHECK_THROWS_AS(check_dimension(0), std::invalid_argument);
}

TEST_CASE("vertex sets")
{
    auto s = set_of(3, {"000", "111"});
    CHECK(s.size() == 2);
    CHECK(s.complement().size() == 6);
    CHECK_FALSE(s.intersects(s.complement()));
    CHECK(VertexSet::from_hex(3, s.hex()) == s);
    CHECK(VertexSet::full(3).size() == 8);
    CHECK(VertexSet::from_mask(2, 0b1001).vertices() == std::vector<Vertex>{0, 3});
}

TEST_CASE("is_slicing examples")
{
    const auto corner = is_slicing(set_of(3, {"111"}), 3);
    REQUIRE(corner);
    CHECK(corner->verify());
    const Slicing textbook{3, set_of(3, {"111"}), {{1, 1, 1}, Rational(-5, 2)}};
    CHECK(textbook.verify());

    CHECK_FALSE(is_slicing(set_of(3, {"000", "011", "101", "110"}), 3));

    const auto low = is_slicing(set_of(3, {"000", "100", "010", "001"}), 3);
    REQUIRE(low);
    CHECK(low->verify());

    const auto empty = is_slicing(VertexSet(3), 3);
    REQUIRE(empty);
    CHECK(empty->witness.omega == RationalVector{0, 0, 0});
    CHECK(empty->witness.offset == -1);
    const auto full = is_slicing(VertexSet::full(3), 3);
    REQUIRE(full);
    CHECK(full->witness.offset == 1);

    CHECK_FALSE(is_slicing(set_of(2, {"00", "11"}), 2));
}

TEST_CASE("threshold function counts")
{
    CHECK(enumerate_slicings(1).size() == 4);
    CHECK(enumerate_slicings(2).size() == 14);
    CHECK(enumerate_slicings(3).size() == 104);
    CHECK(enumerate_slicings(4).size() == 1882);
}

TEST_CASE("enumeration agrees with an integer-weight oracle")
{
    for (int n = 1; n <= 4; ++n) {
        std::set<VertexSet> mine;
        for (const auto& s : enumerate_slicings(n)) mine.insert(s.positive);
        CHECK(mine == integer_weight_oracle(n, n <= 3 ? 2 : 3));
    }
}

TEST_CASE("brute force and arrangement strategies agree", "[slow]")
{
    for (int n = 2; n <= 4; ++n) {
        const auto a = enumerate_slicings(n, SlicingStrategy::brute_force);
        const auto b = enumerate_slicings(n, SlicingStrategy::arrangement);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].positive == b[i].positive);
    }
}

TEST_CASE("enumerated slicings are canonical and carry valid witnesses")
{
    for (int n = 1; n <= 4; ++n) {
        const auto all = enumerate_slicings(n, SlicingStrategy::arrangement, 2);
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].verify());
            if (i) CHECK(all[i - 1].positive < all[i].positive);
        }
        CHECK(all.front().positive.size() == 0);
        CHECK(all.back().positive.size() == vertex_count(n));
    }
}

TEST_CASE("thread count does not change the enumeration")
{
    const auto a = enumerate_slicings(4, SlicingStrategy::arrangement, 1);
    const auto b = enumerate_slicings(4, SlicingStrategy::arrangement, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].positive == b[i].positive);
        CHECK(format_slicing(a[i]) == format_slicing(b[i]));
    }
}

TEST_CASE("a subset is a slicing iff its complement is")
{
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vertex_count(n)); ++mask) {
            const auto s = VertexSet::from_mask(n, mask);
            const auto a = is_slicing(s, n);
            const auto b = is_slicing(s.complement(), n);
            REQUIRE(a.has_value() == b.has_value());
            if (a) {
                Slicing negated{n, s.complement(), a->witness};
                for (auto& x : negated.witness.omega) x = -x;
                negated.witness.offset = -negated.witness.offset;
                CHECK(negated.verify());
            }
        }
}

TEST_CASE("slicings are unate")
{
    for (const auto& s : enumerate_slicings(4)) CHECK(is_unate(s.positive, 4));
    CHECK_FALSE(is_unate(set_of(2, {"01", "10"}), 2));
}

TEST_CASE("the slicing set is closed under cube symmetries")
{
    const auto all = enumerate_slicings(3);
    std::set<VertexSet> sets;
    for (const auto& s : all) sets.insert(s.positive);
    const auto group = cube_symmetries(3);
    CHECK(group.size() == 48);
    for (const auto& g : group)
        for (const auto& s : all) CHECK(sets.count(g.apply(s.positive)) == 1);
}

TEST_CASE("zonotope facet counts")
{
    CHECK(count_zonotope_facets(1) == 4);
    CHECK(count_zonotope_facets(2) == 12);
    CHECK(count_zonotope_facets(3) == 40);
    CHECK(count_zonotope_facets(4) == 280);
    CHECK_THROWS_AS(count_zonotope_facets(6), std::invalid_argument);
}

TEST_CASE("slicing file lines round-trip")
{
    for (const auto& s : enumerate_slicings(3)) {
        const auto line = format_slicing(s);
        const auto back = parse_slicing(line);
        CHECK(back.positive == s.positive);
        CHECK(format_slicing(back) == line);
    }
    CHECK(format_slicing(Slicing{3, set_of(3, {"111"}), {{1, 1, 1}, Rational(-5, 2)}}) == "n:3 pos:80 w:-5/2,1/1,1/1,1/1");
    CHECK_THROWS_AS(parse_slicing("n:3 pos:80 w:1/2,1,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_slicing("garbage"), std::invalid_argument);
}
