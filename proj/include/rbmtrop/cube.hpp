/**
 * Vertices of the n-cube, slicings (linearly separable vertex subsets, i.e.
 * linear threshold functions) and the zonotope of the cube.
 *
 * Vertex v in {0,1}^n is stored as the integer whose binary expansion reads
 * v_1 v_2 ... v_n from the most significant bit down, so integer order is
 * the lexicographic order p_{0...00}, p_{0...01}, ... of the coordinates.
 */
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "simplex.hpp"

namespace rbmtrop {

using Vertex = std::uint32_t;

constexpr int max_cube_dimension = 20;

inline std::size_t vertex_count(int n) { return std::size_t{1} << n; }

/// Coordinate v_{j+1} (0-based j) of vertex v in the n-cube.
inline int coordinate(Vertex v, int j, int n) { return static_cast<int>((v >> (n - 1 - j)) & 1u); }

inline int hamming_weight(Vertex v) { return std::popcount(v); }

inline std::string vertex_string(Vertex v, int n)
{
    std::string s(static_cast<std::size_t>(n), '0');
    for (int j = 0; j < n; ++j) s[j] = coordinate(v, j, n) ? '1' : '0';
    return s;
}

inline Vertex parse_vertex(const std::string& bits)
{
    Vertex v = 0;
    if (bits.empty() || bits.size() > max_cube_dimension)
        throw std::invalid_argument("bad vertex string '" + bits + "'");
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("bad vertex string '" + bits + "'");
        v = (v << 1) | static_cast<Vertex>(ch - '0');
    }
    return v;
}

inline void check_dimension(int n)
{
    if (n < 1 || n > max_cube_dimension)
        throw std::invalid_argument("cube dimension must be in [1, " + std::to_string(max_cube_dimension) + "]");
}

/// The row (1, v) as rationals.
inline RationalVector homogenized_vertex(Vertex v, int n)
{
    RationalVector row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int j = 0; j < n; ++j) row[j + 1] = coordinate(v, j, n);
    return row;
}

/**
 * A subset of {0,1}^n as a bitset over vertex indices.  Ordering is
 * (cardinality, then the subset read as a binary number with vertex i at
 * bit i).
 */
class VertexSet
{
    public:
        VertexSet() = default;
        explicit VertexSet(int n) : n_(n), words_((vertex_count(n) + 63) / 64, 0) {}

        static VertexSet full(int n)
        {
            VertexSet s(n);
            for (Vertex v = 0; v < vertex_count(n); ++v) s.insert(v);
            return s;
        }

        /// For n <= 6: bit i of mask is vertex i.
        static VertexSet from_mask(int n, std::uint64_t mask)
        {
            VertexSet s(n);
            for (Vertex v = 0; v < vertex_count(n); ++v)
                if ((mask >> v) & 1u) s.insert(v);
            return s;
        }

        static VertexSet from_vertices(int n, const std::vector<Vertex>& vs)
        {
            VertexSet s(n);
            for (auto v : vs) s.insert(v);
            return s;
        }

        int dimension() const { return n_; }
        bool contains(Vertex v) const { return (words_[v / 64] >> (v % 64)) & 1u; }
        void insert(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
        void erase(Vertex v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

        std::size_t size() const
        {
            std::size_t c = 0;
            for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        bool empty() const { return size() == 0; }

        std::vector<Vertex> vertices() const
        {
            std::vector<Vertex> out;
            for (Vertex v = 0; v < vertex_count(n_); ++v)
                if (contains(v)) out.push_back(v);
            return out;
        }

        VertexSet complement() const
        {
            VertexSet c(n_);
            for (Vertex v = 0; v < vertex_count(n_); ++v)
                if (!contains(v)) c.insert(v);
            return c;
        }

        bool intersects(const VertexSet& other) const
        {
            for (std::size_t i = 0; i < words_.size(); ++i)
                if (words_[i] & other.words_[i]) return true;
            return false;
        }

        /// Lowercase hex of the subset bitmask, most significant digit first.
        std::string hex() const
        {
            static const char* digits = "0123456789abcdef";
            std::string s;
            const std::size_t nibbles = std::max<std::size_t>(1, (vertex_count(n_) + 3) / 4);
            for (std::size_t k = nibbles; k-- > 0;) {
                unsigned nib = 0;
                for (unsigned b = 0; b < 4; ++b) {
                    const std::size_t v = k * 4 + b;
                    if (v < vertex_count(n_) && contains(static_cast<Vertex>(v))) nib |= 1u << b;
                }
                s.push_back(digits[nib]);
            }
            const auto first = s.find_first_not_of('0');
            return first == std::string::npos ? "0" : s.substr(first);
        }

        static VertexSet from_hex(int n, const std::string& hex)
        {
            VertexSet s(n);
            std::size_t bit = 0;
            for (std::size_t k = hex.size(); k-- > 0; bit += 4) {
                const char ch = hex[k];
                unsigned nib;
                if (ch >= '0' && ch <= '9') nib = static_cast<unsigned>(ch - '0');
                else if (ch >= 'a' && ch <= 'f') nib = static_cast<unsigned>(ch - 'a' + 10);
                else if (ch >= 'A' && ch <= 'F') nib = static_cast<unsigned>(ch - 'A' + 10);
                else throw std::invalid_argument("bad hex digit in '" + hex + "'");
                for (unsigned b = 0; b < 4; ++b) {
                    if (!((nib >> b) & 1u)) continue;
                    if (bit + b >= vertex_count(n))
                        throw std::invalid_argument("hex mask '" + hex + "' exceeds 2^n vertices");
                    s.insert(static_cast<Vertex>(bit + b));
                }
            }
            return s;
        }

        bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

        bool operator<(const VertexSet& o) const
        {
            if (n_ != o.n_) return n_ < o.n_;
            const auto a = size(), b = o.size();
            if (a != b) return a < b;
            for (std::size_t i = words_.size(); i-- > 0;)
                if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
            return false;
        }

    private:
        int n_ = 0;
        std::vector<std::uint64_t> words_;
};

/// Separating hyperplane: omega.v + offset > 0 exactly on the positive set.
struct SlicingWitness
{
    RationalVector omega;
    Rational offset;

    Rational evaluate(Vertex v, int n) const
    {
        Rational s = offset;
        for (int j = 0; j < n; ++j)
            if (coordinate(v, j, n)) s += omega[j];
        return s;
    }
};

struct Slicing
{
    int n = 0;
    VertexSet positive;
    SlicingWitness witness;

    /// Direct re-check that the witness separates exactly `positive`.
    bool verify() const
    {
        if (witness.omega.size() != static_cast<std::size_t>(n)) return false;
        for (Vertex v = 0; v < vertex_count(n); ++v) {
            const int s = witness.evaluate(v, n).sign();
            if (s == 0 || (s > 0) != positive.contains(v)) return false;
        }
        return true;
    }

    bool operator<(const Slicing& o) const { return positive < o.positive; }
};

/// Scales a nonzero rational vector by a positive factor to a primitive integer vector.
inline RationalVector primitive_integer_vector(RationalVector x)
{
    Integer l = 1;
    for (const auto& r : x) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(r)));
    Integer g = 0;
    for (auto& r : x) {
        r *= l;
        g = boost::multiprecision::gcd(g, Integer(boost::multiprecision::abs(boost::multiprecision::numerator(r))));
    }
    if (g > 1)
        for (auto& r : x) r /= g;
    return x;
}

/// A threshold function is monotone (up or down) in every coordinate.
inline bool is_unate(const VertexSet& subset, int n)
{
    for (int j = 0; j < n; ++j) {
        const Vertex flip = Vertex{1} << (n - 1 - j);
        bool up = true, down = true;
        for (Vertex v = 0; v < vertex_count(n) && (up || down); ++v) {
            if (v & flip) continue;
            const bool lo = subset.contains(v), hi = subset.contains(v | flip);
            if (lo && !hi) up = false;
            if (hi && !lo) down = false;
        }
        if (!up && !down) return false;
    }
    return true;
}

/**
 * Decides strict linear separability of `subset` from its complement and
 * returns an exact witness, or nullopt if no hyperplane exists.
 */
inline std::optional<Slicing> is_slicing(const VertexSet& subset, int n)
{
    check_dimension(n);
    if (subset.dimension() != n) throw std::invalid_argument("is_slicing: subset dimension mismatch");
    const std::size_t size = subset.size();
    if (size == 0 || size == vertex_count(n)) {
        SlicingWitness w{RationalVector(static_cast<std::size_t>(n)), size == 0 ? Rational(-1) : Rational(1)};
        return Slicing{n, subset, std::move(w)};
    }
    if (!is_unate(subset, n)) return std::nullopt;

    LinearSystem sys;
    for (Vertex v = 0; v < vertex_count(n); ++v) {
        auto row = homogenized_vertex(v, n);
        if (!subset.contains(v))
            for (auto& x : row) x = -x;
        sys.strict_rows.push_back(std::move(row));
    }
    auto x = solve_feasibility(sys);
    if (!x) return std::nullopt;
    auto p = primitive_integer_vector(*x);
    SlicingWitness w{RationalVector(p.begin() + 1, p.end()), p[0]};
    Slicing s{n, subset, std::move(w)};
    if (!s.verify()) throw std::logic_error("is_slicing: witness fails re-check");
    return s;
}

enum class SlicingStrategy { brute_force, arrangement };

/// Brute force over all 2^(2^n) subsets; n <= 4.
inline std::vector<Slicing> enumerate_slicings_brute_force(int n, unsigned threads = 1)
{
    if (n < 1 || n > 4) throw std::invalid_argument("brute-force slicing enumeration supports 1 <= n <= 4");
    const std::uint64_t subsets = std::uint64_t{1} << vertex_count(n);
    const std::size_t chunks = 256;
    const std::uint64_t per = (subsets + chunks - 1) / chunks;
    auto parts = parallel_map(chunks, threads, [&](std::size_t c) {
        std::vector<Slicing> found;
        for (std::uint64_t m = c * per; m < std::min(subsets, (c + 1) * per); ++m)
            if (auto s = is_slicing(VertexSet::from_mask(n, m), n)) found.push_back(std::move(*s));
        return found;
    });
    std::vector<Slicing> all;
    for (auto& p : parts)
        for (auto& s : p) all.push_back(std::move(s));
    std::sort(all.begin(), all.end());
    return all;
}

/**
 * Regions of the central arrangement {(c, omega) : c + omega.v = 0} in
 * R^{n+1}, built one hyperplane at a time.  Each region carries an interior
 * point; the side that point already lies on needs no LP, the other side is
 * tested exactly.  One sign vector per region gives one slicing.
 */
inline std::vector<Slicing> enumerate_slicings_arrangement(int n, unsigned threads = 1)
{
    if (n < 1 || n > 5) throw std::invalid_argument("arrangement slicing enumeration supports 1 <= n <= 5");
    struct Region
    {
        std::vector<signed char> signs;
        RationalVector point;
    };
    const std::size_t d = static_cast<std::size_t>(n) + 1;
    std::vector<Region> regions{{{}, RationalVector(d)}};

    for (Vertex v = 0; v < vertex_count(n); ++v) {
        const auto normal = homogenized_vertex(v, n);
        auto extend = [&](const Region& r, signed char s) -> std::optional<Region> {
            LinearSystem sys;
            for (Vertex u = 0; u < v; ++u) {
                auto row = homogenized_vertex(u, n);
                if (r.signs[u] < 0)
                    for (auto& x : row) x = -x;
                sys.strict_rows.push_back(std::move(row));
            }
            auto row = normal;
            if (s < 0)
                for (auto& x : row) x = -x;
            sys.strict_rows.push_back(std::move(row));
            auto x = solve_feasibility(sys);
            if (!x) return std::nullopt;
            Region out{r.signs, std::move(*x)};
            out.signs.push_back(s);
            return out;
        };
        auto next = parallel_map(regions.size(), threads, [&](std::size_t i) {
            const Region& r = regions[i];
            std::vector<Region> children;
            const int side = dot(normal, r.point).sign();
            for (signed char s : {static_cast<signed char>(1), static_cast<signed char>(-1)}) {
                if (side == s) {
                    Region keep{r.signs, r.point};
                    keep.signs.push_back(s);
                    children.push_back(std::move(keep));
                } else if (auto c = extend(r, s)) {
                    children.push_back(std::move(*c));
                }
            }
            return children;
        });
        regions.clear();
        for (auto& group : next)
            for (auto& r : group) regions.push_back(std::move(r));
    }

    std::vector<Slicing> all;
    all.reserve(regions.size());
    for (auto& r : regions) {
        VertexSet pos(n);
        for (Vertex v = 0; v < vertex_count(n); ++v)
            if (r.signs[v] > 0) pos.insert(v);
        auto p = primitive_integer_vector(r.point);
        Slicing s{n, std::move(pos), SlicingWitness{RationalVector(p.begin() + 1, p.end()), p[0]}};
        if (!s.verify()) throw std::logic_error("arrangement enumeration: region point fails re-check");
        all.push_back(std::move(s));
    }
    std::sort(all.begin(), all.end());
    return all;
}

/// All slicings of the n-cube (constants included) in canonical order.
inline std::vector<Slicing> enumerate_slicings(int n, SlicingStrategy strategy = SlicingStrategy::arrangement,
                                               unsigned threads = 1)
{
    return strategy == SlicingStrategy::brute_force ? enumerate_slicings_brute_force(n, threads)
                                                    : enumerate_slicings_arrangement(n, threads);
}

/**
 * Facets of the zonotope sum_v [(1,0), (1,v)]: two per linear hyperplane
 * spanned by n linearly independent generators (1, v).
 */
inline std::size_t count_zonotope_facets(int n)
{
    if (n < 1 || n > 5) throw std::invalid_argument("count_zonotope_facets supports 1 <= n <= 5");
    const std::size_t m = vertex_count(n);
    std::set<RationalVector> normals;
    std::vector<std::size_t> pick(static_cast<std::size_t>(n));
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        RationalMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1);
        for (int i = 0; i < n; ++i) {
            const auto row = homogenized_vertex(static_cast<Vertex>(pick[i]), n);
            for (int j = 0; j <= n; ++j) g(i, j) = row[j];
        }
        auto kernel = nullspace(g);
        if (kernel.size() == 1) {
            auto normal = primitive_integer_vector(kernel.front());
            const auto lead = std::find_if(normal.begin(), normal.end(), [](const Rational& r) { return r.sign() != 0; });
            if (lead->sign() < 0)
                for (auto& x : normal) x = -x;
            normals.insert(std::move(normal));
        }
        // next n-combination of [0, m)
        int i = n - 1;
        while (i >= 0 && pick[i] == m - static_cast<std::size_t>(n) + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    return 2 * normals.size();
}

/// Element of the hyperoctahedral group: v'_{perm[j]} = v_j xor flip_j.
struct CubeSymmetry
{
    std::vector<int> perm;
    std::vector<int> flip;

    Vertex apply(Vertex v, int n) const
    {
        Vertex out = 0;
        for (int j = 0; j < n; ++j)
            if (coordinate(v, j, n) ^ flip[j]) out |= Vertex{1} << (n - 1 - perm[j]);
        return out;
    }

    VertexSet apply(const VertexSet& s) const
    {
        const int n = s.dimension();
        VertexSet out(n);
        for (auto v : s.vertices()) out.insert(apply(v, n));
        return out;
    }
};

/// All 2^n n! symmetries of the n-cube.
inline std::vector<CubeSymmetry> cube_symmetries(int n)
{
    std::vector<CubeSymmetry> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned f = 0; f < (1u << n); ++f) {
            std::vector<int> flip(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) flip[j] = (f >> j) & 1u;
            out.push_back({perm, flip});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// One line of the slicing-set file: `n:<dim> pos:<hex> w:<c>,<omega_1>,...`.
inline std::string format_slicing(const Slicing& s)
{
    std::ostringstream out;
    out << "n:" << s.n << " pos:" << s.positive.hex() << " w:" << to_string(s.witness.offset);
    for (const auto& w : s.witness.omega) out << "," << to_string(w);
    return out.str();
}

/// Parses one slicing-file line; the witness is re-checked.
inline Slicing parse_slicing(const std::string& line)
{
    std::istringstream in(line);
    std::string ntok, ptok, wtok;
    if (!(in >> ntok >> ptok >> wtok) || ntok.rfind("n:", 0) != 0 || ptok.rfind("pos:", 0) != 0 ||
        wtok.rfind("w:", 0) != 0)
        throw std::invalid_argument("malformed slicing line: '" + line + "'");
    const int n = std::stoi(ntok.substr(2));
    check_dimension(n);
    Slicing s{n, VertexSet::from_hex(n, ptok.substr(4)), {}};
    std::vector<Rational> values;
    std::stringstream ws(wtok.substr(2));
    for (std::string item; std::getline(ws, item, ',');) values.push_back(parse_rational(item));
    if (values.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("slicing line needs n + 1 witness values: '" + line + "'");
    s.witness.offset = values[0];
    s.witness.omega.assign(values.begin() + 1, values.end());
    if (!s.verify()) throw std::invalid_argument("slicing witness does not separate the stated set: '" + line + "'");
    return s;
}

}  // namespace rbmtrop
