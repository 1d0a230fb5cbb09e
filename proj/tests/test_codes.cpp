#include <catch_amalgamated.hpp>

#include <set>

#include <rbmtrop/codes.hpp>

using namespace rbmtrop;

namespace {

BinaryCode code_of(int n, std::initializer_list<const char*> words)
{
    std::vector<Vertex> w;
    for (const char* s : words) w.push_back(parse_vertex(s));
    return BinaryCode(n, w);
}

bool distance_at_least(const std::vector<Vertex>& words, int d)
{
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (std::popcount(words[i] ^ words[j]) < d) return false;
    return true;
}

bool covers(const std::vector<Vertex>& words, int n)
{
    for (Vertex v = 0; v < vertex_count(n); ++v)
        if (std::none_of(words.begin(), words.end(), [&](Vertex w) { return std::popcount(v ^ w) <= 1; }))
            return false;
    return true;
}

// Best code size over all subsets of {0,1}^n (n <= 4).
int subset_oracle_A2(int n)
{
    int best = 0;
    const std::uint32_t m = static_cast<std::uint32_t>(vertex_count(n));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Vertex> w;
        for (Vertex v = 0; v < m; ++v)
            if ((mask >> v) & 1u) w.push_back(v);
        if (static_cast<int>(w.size()) > best && distance_at_least(w, 3)) best = static_cast<int>(w.size());
    }
    return best;
}

int subset_oracle_K2(int n)
{
    int best = 1 << 30;
    const std::uint32_t m = static_cast<std::uint32_t>(vertex_count(n));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Vertex> w;
        for (Vertex v = 0; v < m; ++v)
            if ((mask >> v) & 1u) w.push_back(v);
        if (static_cast<int>(w.size()) < best && covers(w, n)) best = static_cast<int>(w.size());
    }
    return best;
}

}  // namespace

TEST_CASE("minimum distance examples")
{
    CHECK(min_distance(code_of(3, {"000", "111"})) == 3);
    CHECK(min_distance(hamming_code(3)) == 3);
    CHECK(min_distance(code_of(2, {"00", "01"})) == 1);
    CHECK_THROWS_AS(min_distance(code_of(2, {"00"})), std::invalid_argument);
    CHECK_THROWS_AS(BinaryCode(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryCode(2, {1, 1}), std::invalid_argument);
}

TEST_CASE("covering radius examples")
{
    CHECK(covering_radius(code_of(3, {"000", "111"})) == 1);
    CHECK(covering_radius(code_of(4, {"0000"})) == 4);
    CHECK(covering_radius(hamming_code(3)) == 1);
}

TEST_CASE("Hamming codes are perfect single-error-correcting codes")
{
    CHECK(hamming_code(2).words() == std::vector<Vertex>{0, 7});
    for (int ell = 2; ell <= 4; ++ell) {
        const auto c = hamming_code(ell);
        const int n = (1 << ell) - 1;
        CHECK(c.length() == n);
        CHECK(c.size() == (std::size_t{1} << (n - ell)));
        CHECK(min_distance(c) == 3);
        CHECK(covering_radius(c) == 1);
        // sphere-packing equality
        CHECK(c.size() * static_cast<std::size_t>(n + 1) == vertex_count(n));
        CHECK(varshamov_lower(n) == Integer(c.size()));
        CHECK(covering_upper(n) == Integer(c.size()));
    }
    CHECK(hamming_code(3).size() == 16);
    CHECK(hamming_code(4).size() == 2048);
}

TEST_CASE("closed-form bounds")
{
    CHECK(varshamov_lower(7) == 16);
    CHECK(covering_upper(7) == 16);
    CHECK(varshamov_lower(5) == 4);
    CHECK(covering_upper(5) == 8);
    CHECK(varshamov_lower(19) == 16384);
    CHECK(covering_upper(19) == 32768);
}

TEST_CASE("exhaustive small values")
{
    CHECK(exact_A2(3) == 2);
    CHECK(exact_K2(3) == 2);
    CHECK(exact_A2(5) == 4);
    for (int n = 1; n <= 4; ++n) {
        CHECK(exact_A2(n) == subset_oracle_A2(n));
        CHECK(exact_K2(n) == subset_oracle_K2(n));
    }
    // no 5 words of length 5 are pairwise 3 apart
    std::vector<Vertex> pick;
    bool found5 = false;
    auto search = [&](auto&& self, Vertex from) -> void {
        if (found5) return;
        if (pick.size() == 5) { found5 = true; return; }
        for (Vertex v = from; v < 32; ++v) {
            pick.push_back(v);
            if (distance_at_least(pick, 3)) self(self, v + 1);
            pick.pop_back();
        }
    };
    search(search, 0);
    CHECK_FALSE(found5);

    const auto table = exact_small_values();
    REQUIRE(table.size() == 5);
    for (const auto& row : table) {
        if (row.n >= 3) CHECK(varshamov_lower(row.n) <= Integer(*row.a2));
        if (row.k2) CHECK(covering_upper(row.n) >= Integer(*row.k2));
    }
}

TEST_CASE("Hamming balls are slicings")
{
    const auto balls = code_to_slicings(code_of(3, {"000", "111"}));
    REQUIRE(balls.size() == 2);
    CHECK(balls[0].positive == VertexSet::from_mask(3, 0b00010111));
    CHECK(balls[1].positive == VertexSet::from_mask(3, 0b11101000));

    const auto single = code_to_slicings(code_of(2, {"00"}));
    REQUIRE(single.size() == 1);
    CHECK(single[0].positive == VertexSet::from_mask(2, 0b0111));

    CHECK_THROWS_AS(code_to_slicings(code_of(3, {"000", "011"})), std::invalid_argument);

    const auto perfect = code_to_slicings(hamming_code(3));
    REQUIRE(perfect.size() == 16);
    VertexSet seen(7);
    std::size_t total = 0;
    for (const auto& s : perfect) {
        CHECK(s.verify());
        CHECK(is_slicing(s.positive, 7).has_value());
        CHECK(s.positive.size() == 8);
        CHECK_FALSE(s.positive.intersects(seen));
        for (auto v : s.positive.vertices()) seen.insert(v);
        total += s.positive.size();
    }
    CHECK(total == 128);
}

TEST_CASE("lexicodes have the requested distance")
{
    for (int n = 3; n <= 9; ++n) {
        const auto c = lexicode(n, 3);
        if (c.size() >= 2) CHECK(min_distance(c) >= 3);
        CHECK(Integer(c.size()) >= varshamov_lower(n));
    }
}

TEST_CASE("stored table of known bounds")
{
    const auto r19 = table_known_bounds(19);
    REQUIRE(r19);
    CHECK(r19->k_le == 20480);
    CHECK(r19->k_ge == Integer(31744));
    CHECK(r19->k_le_improved);
    CHECK(r19->k_ge_improved);

    const auto r7 = table_known_bounds(7);
    REQUIRE(r7);
    CHECK(r7->k_le == 16);
    CHECK(r7->k_ge == Integer(16));

    const auto r5 = table_known_bounds(5);
    REQUIRE(r5);
    CHECK(r5->k_le == 4);
    CHECK(r5->k_ge == Integer(7));

    CHECK_FALSE(table_known_bounds(34));
    CHECK_FALSE(table_known_bounds(4));
    CHECK(known_bounds_lengths().front() == 5);
    CHECK(known_bounds_lengths().back() == 512);
}

TEST_CASE("table entries are the closed forms unless marked as improvements")
{
    for (int n : known_bounds_lengths()) {
        const auto row = *table_known_bounds(n);
        if (row.k_le_improved) CHECK(row.k_le > varshamov_lower(n));
        else CHECK(row.k_le == varshamov_lower(n));
        if (!row.k_ge) continue;
        if (row.k_ge_improved) CHECK(*row.k_ge < covering_upper(n));
        else CHECK(*row.k_ge == covering_upper(n));
        CHECK(row.k_le <= *row.k_ge);
    }
}

TEST_CASE("code files round-trip")
{
    const auto c = hamming_code(2);
    CHECK(format_code(c) == "n=3\n000\n111\n");
    const auto back = parse_code("n=3\n111\n000\n");
    CHECK(back.words() == c.words());
    CHECK_THROWS_AS(parse_code("n=3\n0000\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_code("000\n"), std::invalid_argument);
}
