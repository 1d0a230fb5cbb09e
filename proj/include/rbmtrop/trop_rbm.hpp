/**
 * The tropical morphism Phi of the restricted Boltzmann machine, its
 * inference functions, the slicing matrices (A | A_C1 | ... | A_Ck) whose
 * maximal rank is the dimension of the tropical model, and an exact
 * membership oracle for the one-hidden-node tropical model.
 */
#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "codes.hpp"
#include "cube.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "simplex.hpp"

namespace rbmtrop {

/// Parameters (W, b, c): W is k x n, b in Q^n, c in Q^k.
struct TropParams
{
    int n = 0;
    int k = 0;
    RationalMatrix W;
    RationalVector b;
    RationalVector c;

    void validate() const
    {
        check_dimension(n);
        if (k < 0 || k > 24) throw std::invalid_argument("TropParams: k must be in [0, 24]");
        if (W.rows() != static_cast<std::size_t>(k) || W.cols() != static_cast<std::size_t>(n) ||
            b.size() != static_cast<std::size_t>(n) || c.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("TropParams: shapes inconsistent with (n, k)");
    }

    /// Single hidden node: b, omega (row of W), c.
    static TropParams single(const RationalVector& b, const RationalVector& omega, const Rational& c)
    {
        TropParams p;
        p.n = static_cast<int>(b.size());
        p.k = 1;
        p.W = RationalMatrix(1, b.size(), omega);
        p.b = b;
        p.c = {c};
        p.validate();
        return p;
    }
};

/// Integer-valued random parameters with entries in [-bound, bound].
template <class Rng>
TropParams random_trop_params(int n, int k, Rng& rng, int bound = 5)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    TropParams p;
    p.n = n;
    p.k = k;
    p.W = RationalMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) p.W(i, j) = dist(rng);
    p.b.resize(static_cast<std::size_t>(n));
    for (auto& x : p.b) x = dist(rng);
    p.c.resize(static_cast<std::size_t>(k));
    for (auto& x : p.c) x = dist(rng);
    return p;
}

/// Entries m + u/1009 with integer m in [-bound, bound] and 1 <= u <= 1008; ties are rare.
template <class Rng>
TropParams random_generic_trop_params(int n, int k, Rng& rng, int bound = 5)
{
    std::uniform_int_distribution<int> frac(1, 1008);
    auto p = random_trop_params(n, k, rng, bound);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) p.W(i, j) += Rational(frac(rng), 1009);
    for (auto& x : p.b) x += Rational(frac(rng), 1009);
    for (auto& x : p.c) x += Rational(frac(rng), 1009);
    return p;
}

/// A point of tropical projective space: q in Q^(2^n) modulo the all-ones vector.
class TropicalPoint
{
    public:
        TropicalPoint() = default;
        TropicalPoint(int n, RationalVector q) : n_(n), q_(std::move(q))
        {
            check_dimension(n);
            if (q_.size() != vertex_count(n)) throw std::invalid_argument("TropicalPoint: need 2^n coordinates");
        }

        int dimension() const { return n_; }
        const RationalVector& coords() const { return q_; }
        const Rational& operator[](Vertex v) const { return q_[v]; }

        /// Representative with q(0...0) = 0.
        RationalVector normalized() const
        {
            RationalVector out = q_;
            for (auto& x : out) x -= q_[0];
            return out;
        }

        bool operator==(const TropicalPoint& o) const { return n_ == o.n_ && normalized() == o.normalized(); }

    private:
        int n_ = 0;
        RationalVector q_;
};

/// q(v) = max_h (h^T W v + b^T v + c^T h) by enumerating all 2^k hidden states.
inline TropicalPoint phi(const TropParams& p)
{
    p.validate();
    RationalVector q(vertex_count(p.n));
    for (Vertex v = 0; v < vertex_count(p.n); ++v) {
        Rational bv = 0;
        for (int j = 0; j < p.n; ++j)
            if (coordinate(v, j, p.n)) bv += p.b[j];
        std::optional<Rational> best;
        for (Vertex h = 0; h < vertex_count(p.k); ++h) {
            Rational score = bv;
            for (int i = 0; i < p.k; ++i) {
                if (!coordinate(h, i, p.k)) continue;
                score += p.c[i];
                for (int j = 0; j < p.n; ++j)
                    if (coordinate(v, j, p.n)) score += p.W(i, j);
            }
            if (!best || score > *best) best = score;
        }
        q[v] = *best;
    }
    return TropicalPoint(p.n, std::move(q));
}

/// Raised when the most likely hidden state is not unique at some visible state.
class AmbiguousInference : public std::invalid_argument
{
    public:
        AmbiguousInference(Vertex v, std::vector<Vertex> tied, const std::string& what)
            : std::invalid_argument(what), visible(v), tied_states(std::move(tied)) {}

        Vertex visible;
        std::vector<Vertex> tied_states;
};

/// The explanation map v -> argmax_h; entry v is the hidden state for v.
inline std::vector<Vertex> inference_function(const TropParams& p)
{
    p.validate();
    std::vector<Vertex> out(vertex_count(p.n));
    for (Vertex v = 0; v < vertex_count(p.n); ++v) {
        std::optional<Rational> best;
        std::vector<Vertex> argmax;
        for (Vertex h = 0; h < vertex_count(p.k); ++h) {
            Rational score = 0;
            for (int i = 0; i < p.k; ++i) {
                if (!coordinate(h, i, p.k)) continue;
                score += p.c[i];
                for (int j = 0; j < p.n; ++j)
                    if (coordinate(v, j, p.n)) score += p.W(i, j);
            }
            if (!best || score > *best) {
                best = score;
                argmax = {h};
            } else if (score == *best) {
                argmax.push_back(h);
            }
        }
        if (argmax.size() > 1) {
            std::ostringstream msg;
            msg << "inference is ambiguous at v=" << vertex_string(v, p.n) << ": hidden states";
            for (auto h : argmax) msg << " " << vertex_string(h, p.k);
            msg << " tie (parameters lie on a boundary of a linearity cone)";
            throw AmbiguousInference(v, argmax, msg.str());
        }
        out[v] = argmax.front();
    }
    return out;
}

/// The 2^n x (n + k(n+1)) matrix (A | A_C1 | ... | A_Ck).
inline RationalMatrix slicing_matrix(int n, const std::vector<Slicing>& slicings)
{
    check_dimension(n);
    const std::size_t k = slicings.size();
    const std::size_t cols = static_cast<std::size_t>(n) + k * (static_cast<std::size_t>(n) + 1);
    RationalMatrix m(vertex_count(n), cols);
    for (Vertex v = 0; v < vertex_count(n); ++v) {
        for (int j = 0; j < n; ++j) m(v, j) = coordinate(v, j, n);
        for (std::size_t s = 0; s < k; ++s) {
            if (slicings[s].n != n) throw std::invalid_argument("slicing_matrix: slicing dimension mismatch");
            if (!slicings[s].positive.contains(v)) continue;
            const std::size_t base = static_cast<std::size_t>(n) + s * (static_cast<std::size_t>(n) + 1);
            m(v, base) = 1;
            for (int j = 0; j < n; ++j) m(v, base + 1 + j) = coordinate(v, j, n);
        }
    }
    return m;
}

/// Canonical slicing table of the n-cube, computed once per n (n <= 4).
inline const std::vector<Slicing>& slicings_of(int n)
{
    if (n < 1 || n > 4) throw std::invalid_argument("cached slicing tables exist for 1 <= n <= 4");
    static std::once_flag flags[5];
    static std::vector<Slicing> tables[5];
    std::call_once(flags[n], [n] { tables[n] = enumerate_slicings(n); });
    return tables[n];
}

/// lambda(n)^k.
inline Integer count_inference_functions(int n, int k)
{
    if (k < 0) throw std::invalid_argument("count_inference_functions: k >= 0");
    const Integer lambda = static_cast<long>(slicings_of(n).size());
    Integer total = 1;
    for (int i = 0; i < k; ++i) total *= lambda;
    return total;
}

enum class DimensionStrategy { exhaustive, greedy_random, code_based };

inline std::string to_string(DimensionStrategy s)
{
    switch (s) {
        case DimensionStrategy::exhaustive: return "exhaustive";
        case DimensionStrategy::greedy_random: return "greedy_random";
        case DimensionStrategy::code_based: return "code_based";
    }
    return "?";
}

struct DimensionOptions
{
    DimensionStrategy strategy = DimensionStrategy::code_based;
    std::uint64_t seed = 0;
    int restarts = 3;
    bool allow_long = false;
    unsigned threads = 1;
};

struct DimensionRecord
{
    int n = 0;
    int k = 0;
    DimensionStrategy strategy = DimensionStrategy::code_based;
    std::size_t max_rank = 0;
    std::size_t dim = 0;
    bool certified = false;
    std::vector<Slicing> witness;
};

/// min(nk + n + k, 2^n - 1): the expected dimension.
inline std::size_t expected_dimension(int n, int k)
{
    const std::size_t params = static_cast<std::size_t>(n) * k + n + k;
    return std::min(params, vertex_count(n) - 1);
}

namespace detail {

// Combinations with repetition of k indices from [0, m), lexicographic.
inline bool next_multiset(std::vector<std::size_t>& idx, std::size_t m)
{
    int i = static_cast<int>(idx.size()) - 1;
    while (i >= 0 && idx[i] == m - 1) --i;
    if (i < 0) return false;
    ++idx[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < idx.size(); ++j) idx[j] = idx[i];
    return true;
}

inline Integer multiset_count(std::size_t m, int k)
{
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= Integer(static_cast<unsigned long>(m + i));
        den *= i + 1;
    }
    return num / den;
}

template <class Rng>
Slicing random_slicing(int n, Rng& rng)
{
    std::uniform_int_distribution<int> dist(-2 * n, 2 * n);
    for (;;) {
        SlicingWitness w{RationalVector(static_cast<std::size_t>(n)), dist(rng)};
        for (auto& x : w.omega) x = dist(rng);
        Slicing s{n, VertexSet(n), w};
        bool degenerate = false;
        for (Vertex v = 0; v < vertex_count(n) && !degenerate; ++v) {
            const int sg = w.evaluate(v, n).sign();
            if (sg == 0) degenerate = true;
            else if (sg > 0) s.positive.insert(v);
        }
        if (!degenerate) return s;
    }
}

inline std::size_t witness_rank(int n, const std::vector<Slicing>& s) { return rank(slicing_matrix(n, s)); }

inline std::vector<Slicing> code_based_slicings(int n, int k)
{
    const int ell = floor_log2(static_cast<unsigned long long>(n) + 1);
    const BinaryCode code = ((1 << ell) - 1 == n && ell >= 2 && ell <= 4) ? hamming_code(ell) : lexicode(n, 3);
    auto balls = code_to_slicings(code);
    std::vector<Slicing> chosen(balls.begin(), balls.begin() + std::min<std::size_t>(balls.size(), k));
    // More hidden nodes than codewords: add balls around other centers, greedily by rank gain.
    while (chosen.size() < static_cast<std::size_t>(k)) {
        std::size_t base = witness_rank(n, chosen), best_gain = 0;
        Vertex best_center = 0;
        for (Vertex v = 0; v < vertex_count(n); ++v) {
            auto trial = chosen;
            trial.push_back(hamming_ball_slicing(v, n));
            const std::size_t gain = witness_rank(n, trial) - base;
            if (gain > best_gain) { best_gain = gain; best_center = v; }
            if (base + gain >= vertex_count(n)) break;
        }
        chosen.push_back(hamming_ball_slicing(best_center, n));
    }
    return chosen;
}

}  // namespace detail

/**
 * Dimension of the tropical RBM model as the maximal rank of
 * (A | A_C1 | ... | A_Ck), reported as min(max_rank, 2^n - 1).
 */
inline DimensionRecord tropical_dimension(int n, int k, const DimensionOptions& opt = {})
{
    check_dimension(n);
    if (k < 0) throw std::invalid_argument("tropical_dimension: k >= 0");
    if (n > 12) throw std::invalid_argument("tropical_dimension: n <= 12");
    DimensionRecord rec;
    rec.n = n;
    rec.k = k;
    rec.strategy = opt.strategy;
    const std::size_t rank_cap = std::min<std::size_t>(
        static_cast<std::size_t>(n) * k + n + k, vertex_count(n));

    switch (opt.strategy) {
        case DimensionStrategy::exhaustive: {
            if (n > 4) throw std::invalid_argument("exhaustive dimension search supports n <= 4");
            const auto& all = slicings_of(n);
            const Integer combos = detail::multiset_count(all.size(), k);
            if (!opt.allow_long && combos > 200000)
                throw std::invalid_argument("exhaustive search over " + combos.str() +
                                            " slicing tuples exceeds the guard; pass allow_long");
            std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
            bool more = true, done = false;
            const std::size_t batch = 512;
            bool have = false;
            while (more && !done) {
                std::vector<std::vector<std::size_t>> tuples;
                while (more && tuples.size() < batch) {
                    tuples.push_back(idx);
                    more = detail::next_multiset(idx, all.size());
                }
                auto ranks = parallel_map(tuples.size(), opt.threads, [&](std::size_t t) {
                    std::vector<Slicing> s;
                    for (auto i : tuples[t]) s.push_back(all[i]);
                    return detail::witness_rank(n, s);
                });
                for (std::size_t t = 0; t < tuples.size(); ++t) {
                    if (!have || ranks[t] > rec.max_rank) {
                        have = true;
                        rec.max_rank = ranks[t];
                        rec.witness.clear();
                        for (auto i : tuples[t]) rec.witness.push_back(all[i]);
                    }
                    if (rec.max_rank >= rank_cap) { done = true; break; }
                }
            }
            rec.certified = true;
            break;
        }
        case DimensionStrategy::code_based: {
            rec.witness = detail::code_based_slicings(n, k);
            rec.max_rank = detail::witness_rank(n, rec.witness);
            break;
        }
        case DimensionStrategy::greedy_random: {
            std::mt19937_64 rng(opt.seed);
            const std::size_t target = expected_dimension(n, k);
            std::vector<Slicing> best;
            std::size_t best_rank = 0;
            bool have_best = false;
            for (int restart = 0; restart < std::max(1, opt.restarts); ++restart) {
                std::vector<Slicing> current;
                if (restart == 0 && n >= 3) {
                    current = detail::code_based_slicings(n, k);
                } else {
                    for (int i = 0; i < k; ++i) current.push_back(detail::random_slicing(n, rng));
                }
                std::size_t current_rank = detail::witness_rank(n, current);
                const int steps = k == 0 ? 0 : 20 * k + 50;
                for (int step = 0; step < steps && std::min(current_rank, vertex_count(n) - 1) < target; ++step) {
                    std::uniform_int_distribution<int> pick(0, k - 1);
                    auto trial = current;
                    trial[pick(rng)] = detail::random_slicing(n, rng);
                    const std::size_t r = detail::witness_rank(n, trial);
                    if (r >= current_rank) {
                        current = std::move(trial);
                        current_rank = r;
                    }
                }
                if (!have_best || current_rank > best_rank) {
                    best = current;
                    best_rank = current_rank;
                    have_best = true;
                }
                if (std::min(best_rank, vertex_count(n) - 1) >= target) break;
            }
            rec.witness = std::move(best);
            rec.max_rank = best_rank;
            break;
        }
    }
    if (rec.max_rank > rank_cap)
        throw std::logic_error("tropical_dimension: rank exceeds min(nk+n+k, 2^n)");
    rec.dim = std::min(rec.max_rank, vertex_count(n) - 1);
    if (opt.strategy != DimensionStrategy::exhaustive) rec.certified = rec.dim == expected_dimension(n, k);
    return rec;
}

/// Witness parameters of a TM^1_n member: q(v) = b.v + max(0, omega.v + c) + mu.
struct MembershipResult
{
    bool member = false;
    std::optional<Slicing> slicing;
    RationalVector b;
    RationalVector omega;
    Rational c;
    Rational mu;

    TropParams params() const { return TropParams::single(b, omega, c); }
};

namespace detail {

inline std::optional<MembershipResult> membership_for_slicing(const TropicalPoint& q, const Slicing& s)
{
    const int n = q.dimension();
    // variables: b_1..b_n, omega_1..omega_n, c, mu, x0 (homogenizer)
    const std::size_t d = 2 * static_cast<std::size_t>(n) + 3;
    const std::size_t ci = 2 * n, mui = 2 * n + 1, x0 = 2 * n + 2;
    LinearSystem sys;
    for (Vertex v = 0; v < vertex_count(n); ++v) {
        const bool inside = s.positive.contains(v);
        RationalVector eq(d), cone(d);
        for (int j = 0; j < n; ++j) {
            if (!coordinate(v, j, n)) continue;
            eq[j] = 1;
            if (inside) eq[n + j] = 1;
            cone[n + j] = inside ? 1 : -1;
        }
        if (inside) eq[ci] = 1;
        eq[mui] = 1;
        eq[x0] = -q[v];
        cone[ci] = inside ? 1 : -1;
        sys.equality_rows.push_back(std::move(eq));
        sys.weak_rows.push_back(std::move(cone));
    }
    RationalVector positive(d);
    positive[x0] = 1;
    sys.strict_rows.push_back(std::move(positive));

    auto x = solve_feasibility(sys);
    if (!x) return std::nullopt;
    const Rational scale = (*x)[x0];
    MembershipResult r;
    r.member = true;
    r.slicing = s;
    for (int j = 0; j < n; ++j) {
        r.b.push_back((*x)[j] / scale);
        r.omega.push_back((*x)[n + j] / scale);
    }
    r.c = (*x)[ci] / scale;
    r.mu = (*x)[mui] / scale;
    return r;
}

}  // namespace detail

/**
 * Exact membership in the closed fan TM^1_n (n <= 4): one LP per slicing C
 * asking for b, omega, c, mu with q = b.v + mu off C, q = b.v + omega.v + c + mu
 * on C, omega.v + c >= 0 on C and <= 0 off C.  The first feasible slicing in
 * canonical order is reported.
 */
inline MembershipResult membership_tm1(const TropicalPoint& q, unsigned threads = 1)
{
    const int n = q.dimension();
    const auto& slicings = slicings_of(n);
    const std::size_t batch = threads <= 1 ? 1 : 4 * static_cast<std::size_t>(threads);
    for (std::size_t start = 0; start < slicings.size(); start += batch) {
        const std::size_t count = std::min(batch, slicings.size() - start);
        auto found = parallel_map(count, threads, [&](std::size_t i) {
            return detail::membership_for_slicing(q, slicings[start + i]);
        });
        for (auto& f : found)
            if (f) return std::move(*f);
    }
    return MembershipResult{};
}

/// TropicalPoint file: 2^n rationals, one per line, lexicographic v order.
inline std::string format_point(const RationalVector& q)
{
    std::string out;
    for (const auto& x : q) out += to_string(x) + "\n";
    return out;
}

/// Parses 2^n rationals; returns (n, values).
inline std::pair<int, RationalVector> parse_point_values(const std::string& text)
{
    std::istringstream in(text);
    RationalVector values;
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        values.push_back(parse_rational(line));
    }
    const std::size_t m = values.size();
    if (m < 2 || (m & (m - 1)) != 0) throw std::invalid_argument("point file must hold 2^n values, n >= 1");
    return {std::countr_zero(m), std::move(values)};
}

inline TropicalPoint parse_tropical_point(const std::string& text)
{
    auto [n, values] = parse_point_values(text);
    return TropicalPoint(n, std::move(values));
}

}  // namespace rbmtrop
