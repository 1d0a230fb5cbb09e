/**
 * Binary packing and covering codes, the closed-form Varshamov / covering
 * bounds, exhaustive small values of A_2(n,3) and K_2(n,1), and the
 * code -> disjoint slicings construction.
 */
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube.hpp"
#include "rational.hpp"

namespace rbmtrop {

inline int hamming_distance(Vertex a, Vertex b) { return std::popcount(a ^ b); }

class BinaryCode
{
    public:
        BinaryCode(int n, std::vector<Vertex> words) : n_(n), words_(std::move(words))
        {
            check_dimension(n);
            if (words_.empty()) throw std::invalid_argument("BinaryCode: empty code");
            std::sort(words_.begin(), words_.end());
            if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
                throw std::invalid_argument("BinaryCode: repeated codeword");
            if (words_.back() >= vertex_count(n))
                throw std::invalid_argument("BinaryCode: codeword longer than n bits");
        }

        int length() const { return n_; }
        std::size_t size() const { return words_.size(); }
        const std::vector<Vertex>& words() const { return words_; }

    private:
        int n_;
        std::vector<Vertex> words_;
};

inline int min_distance(const BinaryCode& code)
{
    const auto& w = code.words();
    if (w.size() < 2) throw std::invalid_argument("min_distance: undefined for a single codeword");
    int best = code.length() + 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, hamming_distance(w[i], w[j]));
    return best;
}

inline int covering_radius(const BinaryCode& code)
{
    int radius = 0;
    for (Vertex v = 0; v < vertex_count(code.length()); ++v) {
        int nearest = code.length();
        for (auto w : code.words()) nearest = std::min(nearest, hamming_distance(v, w));
        radius = std::max(radius, nearest);
    }
    return radius;
}

/**
 * The perfect (2^l - 1, 2^l - l - 1, 3) Hamming code: kernel of the parity
 * check matrix whose j-th column is j in binary.
 */
inline BinaryCode hamming_code(int ell)
{
    if (ell < 2 || ell > 4) throw std::invalid_argument("hamming_code supports 2 <= l <= 4");
    const int n = (1 << ell) - 1;
    std::vector<Vertex> words;
    for (Vertex x = 0; x < vertex_count(n); ++x) {
        unsigned syndrome = 0;
        for (int j = 0; j < n; ++j)
            if (coordinate(x, j, n)) syndrome ^= static_cast<unsigned>(j + 1);
        if (syndrome == 0) words.push_back(x);
    }
    return BinaryCode(n, std::move(words));
}

/// Greedy lexicographic code with minimum distance d.
inline BinaryCode lexicode(int n, int d)
{
    check_dimension(n);
    std::vector<Vertex> words;
    for (Vertex x = 0; x < vertex_count(n); ++x) {
        bool ok = true;
        for (auto w : words)
            if (hamming_distance(x, w) < d) { ok = false; break; }
        if (ok) words.push_back(x);
    }
    return BinaryCode(n, std::move(words));
}

inline int ceil_log2(unsigned long long x) { return x <= 1 ? 0 : static_cast<int>(std::bit_width(x - 1)); }
inline int floor_log2(unsigned long long x) { return static_cast<int>(std::bit_width(x)) - 1; }

/// 2^(n - ceil(log2(n+1))), a lower bound on A_2(n,3).
inline Integer varshamov_lower(int n)
{
    if (n < 1) throw std::invalid_argument("varshamov_lower: n >= 1");
    return pow2(static_cast<unsigned>(n - ceil_log2(static_cast<unsigned long long>(n) + 1)));
}

/// 2^(n - floor(log2(n+1))), an upper bound on K_2(n,1).
inline Integer covering_upper(int n)
{
    if (n < 1) throw std::invalid_argument("covering_upper: n >= 1");
    return pow2(static_cast<unsigned>(n - floor_log2(static_cast<unsigned long long>(n) + 1)));
}

/// Radius-1 ball around w as a slicing: (2w - 1).v + 3/2 - |w| > 0.
inline Slicing hamming_ball_slicing(Vertex w, int n)
{
    Slicing s{n, VertexSet(n), {}};
    s.witness.omega.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) s.witness.omega[j] = 2 * coordinate(w, j, n) - 1;
    s.witness.offset = Rational(3, 2) - hamming_weight(w);
    s.positive.insert(w);
    for (int j = 0; j < n; ++j) s.positive.insert(w ^ (Vertex{1} << (n - 1 - j)));
    return s;
}

/// One slicing per codeword (its Hamming ball); requires minimum distance >= 3.
inline std::vector<Slicing> code_to_slicings(const BinaryCode& code)
{
    if (code.size() >= 2 && min_distance(code) < 3)
        throw std::invalid_argument("code_to_slicings: minimum distance < 3, Hamming balls overlap");
    std::vector<Slicing> out;
    for (auto w : code.words()) out.push_back(hamming_ball_slicing(w, code.length()));
    return out;
}

/// A_2(n,3) by maximum-clique search; the first codeword is fixed to 0.
inline int exact_A2(int n)
{
    if (n < 1 || n > 5) throw std::invalid_argument("exact A_2(n,3) supports 1 <= n <= 5");
    int best = 0;
    auto grow = [&](auto&& self, int chosen, const std::vector<Vertex>& candidates) -> void {
        if (chosen > best) best = chosen;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (chosen + static_cast<int>(candidates.size() - i) <= best) return;
            std::vector<Vertex> rest;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (hamming_distance(candidates[i], candidates[j]) >= 3) rest.push_back(candidates[j]);
            self(self, chosen + 1, rest);
        }
    };
    std::vector<Vertex> start;
    for (Vertex v = 1; v < vertex_count(n); ++v)
        if (hamming_weight(v) >= 3) start.push_back(v);
    grow(grow, 1, start);
    return best;
}

/// K_2(n,1) by exact minimum cover with radius-1 balls; 0 is fixed as a codeword.
inline int exact_K2(int n)
{
    if (n < 1 || n > 4) throw std::invalid_argument("exact K_2(n,1) supports 1 <= n <= 4");
    const std::size_t m = vertex_count(n);
    auto ball = [&](Vertex w) {
        std::uint64_t b = std::uint64_t{1} << w;
        for (int j = 0; j < n; ++j) b |= std::uint64_t{1} << (w ^ (Vertex{1} << j));
        return b;
    };
    const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    int best = static_cast<int>(m);
    auto cover = [&](auto&& self, std::uint64_t covered, int used) -> void {
        if (covered == all) { best = std::min(best, used); return; }
        const int left = static_cast<int>(m) - std::popcount(covered);
        if (used + (left + n) / (n + 1) >= best) return;
        const Vertex u = static_cast<Vertex>(std::countr_one(covered));
        for (int j = -1; j < n; ++j) {
            const Vertex w = j < 0 ? u : (u ^ (Vertex{1} << j));
            self(self, covered | ball(w), used + 1);
        }
    };
    cover(cover, ball(0), 1);
    return best;
}

struct SmallCodeValue
{
    int n;
    std::optional<int> a2;  ///< A_2(n,3)
    std::optional<int> k2;  ///< K_2(n,1)
};

/// Exhaustive values for n = 1..5 (K_2 only up to n = 4).
inline std::vector<SmallCodeValue> exact_small_values()
{
    std::vector<SmallCodeValue> out;
    for (int n = 1; n <= 5; ++n) {
        SmallCodeValue row{n, exact_A2(n), std::nullopt};
        if (n <= 4) row.k2 = exact_K2(n);
        out.push_back(row);
    }
    return out;
}

struct KnownBounds
{
    int n;
    Integer k_le;                 ///< lower bound on A_2(n,3)
    std::optional<Integer> k_ge;  ///< upper bound on K_2(n,1), when listed
    bool k_le_improved;           ///< printed in bold: better than the closed form
    bool k_ge_improved;
};

namespace detail {

struct TableRow
{
    int n;
    unsigned le_pow;
    const char* le_factor;
    bool le_bold;
    int ge_pow;  // -1: k_ge absent; otherwise k_ge = 2^ge_pow * ge_factor
    const char* ge_factor;
    bool ge_bold;
};

// Rows exactly as printed in the published table of known bounds
// (A_2(n,3) lower bounds | K_2(n,1) upper bounds), bold flags included.
inline const std::vector<TableRow>& known_bounds_rows()
{
    static const std::vector<TableRow> rows = {
        {5, 2, "1", false, 0, "7", true},
        {6, 3, "1", false, 0, "12", true},
        {7, 4, "1", false, 4, "1", false},
        {8, 2, "5", true, 5, "1", false},
        {9, 3, "5", true, 0, "62", true},
        {10, 3, "9", true, 0, "120", true},
        {11, 4, "9", true, 0, "192", true},
        {12, 8, "1", false, 0, "380", true},
        {13, 9, "1", false, 0, "736", true},
        {14, 10, "1", false, 0, "1408", true},
        {15, 11, "1", false, 11, "1", false},
        {16, 5, "85", true, 12, "1", false},
        {17, 6, "83", true, 13, "1", false},
        {18, 8, "41", true, 14, "1", false},
        {19, 12, "5", true, 0, "31744", true},
        {20, 12, "9", true, 0, "63488", true},
        {21, 13, "9", true, 0, "122880", true},
        {22, 14, "9", true, 0, "245760", true},
        {23, 15, "9", true, 0, "393216", true},
        {24, 19, "1", false, 0, "786432", true},
        {25, 20, "1", false, 0, "1556480", true},
        {26, 21, "1", false, 0, "3112960", true},
        {27, 22, "1", false, 0, "6029312", true},
        {28, 23, "1", false, 0, "12058624", true},
        {29, 24, "1", false, 0, "23068672", true},
        {30, 25, "1", false, 0, "46137344", true},
        {31, 26, "1", false, 26, "1", false},
        {32, 20, "85", true, 27, "1", false},
        {33, 21, "85", true, 28, "1", false},
        // second column block: only the A_2(n,3) bound is listed
        {35, 23, "83", true, -1, "", false},
        {37, 26, "41", true, -1, "", false},
        {39, 31, "5", true, -1, "", false},
        {47, 38, "9", true, -1, "", false},
        {63, 57, "1", false, -1, "", false},
        {70, 43, "1657009", true, -1, "", false},
        {71, 63, "3", true, -1, "", false},
        {75, 63, "41", true, -1, "", false},
        {79, 70, "5", true, -1, "", false},
        {95, 85, "9", true, -1, "", false},
        {127, 120, "1", false, -1, "", false},
        {141, 113, "1657009", true, -1, "", false},
        {143, 134, "3", true, -1, "", false},
        {151, 138, "41", true, -1, "", false},
        {159, 149, "5", true, -1, "", false},
        {163, 151, "19", true, -1, "", false},
        {191, 180, "9", true, -1, "", false},
        {255, 247, "1", false, -1, "", false},
        {270, 202, "1021273028302258913", true, -1, "", false},
        {283, 254, "1657009", true, -1, "", false},
        {287, 277, "3", true, -1, "", false},
        {300, 220, "3348824985082075276195", true, -1, "", false},
        {303, 289, "41", true, -1, "", false},
        {319, 308, "5", true, -1, "", false},
        {327, 314, "19", true, -1, "", false},
        {383, 371, "9", true, -1, "", false},
        {511, 502, "1", false, -1, "", false},
        {512, 443, "1021273028302258913", true, -1, "", false},
    };
    return rows;
}

}  // namespace detail

inline std::vector<int> known_bounds_lengths()
{
    std::vector<int> out;
    for (const auto& r : detail::known_bounds_rows()) out.push_back(r.n);
    return out;
}

/// The stored table row for n, or nullopt when n is not listed.
inline std::optional<KnownBounds> table_known_bounds(int n)
{
    for (const auto& r : detail::known_bounds_rows()) {
        if (r.n != n) continue;
        KnownBounds kb{n, pow2(r.le_pow) * Integer(r.le_factor), std::nullopt, r.le_bold, r.ge_bold};
        if (r.ge_pow >= 0) kb.k_ge = pow2(static_cast<unsigned>(r.ge_pow)) * Integer(r.ge_factor);
        return kb;
    }
    return std::nullopt;
}

/// Code file: `n=<len>` then one binary string per line.
inline std::string format_code(const BinaryCode& code)
{
    std::ostringstream out;
    out << "n=" << code.length() << "\n";
    for (auto w : code.words()) out << vertex_string(w, code.length()) << "\n";
    return out.str();
}

inline BinaryCode parse_code(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Vertex> words;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (n < 0) {
            if (line.rfind("n=", 0) != 0) throw std::invalid_argument("code file must start with n=<len>");
            n = std::stoi(line.substr(2));
            check_dimension(n);
            continue;
        }
        if (static_cast<int>(line.size()) != n)
            throw std::invalid_argument("codeword '" + line + "' does not have length " + std::to_string(n));
        words.push_back(parse_vertex(line));
    }
    if (n < 0) throw std::invalid_argument("empty code file");
    return BinaryCode(n, std::move(words));
}

}  // namespace rbmtrop
