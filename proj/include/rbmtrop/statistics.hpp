/**
 * Probability side of the RBM: exact distributions from the exp-domain
 * parameters (beta, gamma, omega), the two-component mixture
 * parameterization of the one-hidden-node model and the substitution
 * between them, Hadamard products, flattenings, covariances and the
 * necessary membership conditions.
 */
#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace rbmtrop {

/// beta_j = exp(b_j), gamma_i = exp(c_i), omega_ij = exp(W_ij); all positive.
struct ExpParams
{
    int n = 0;
    int k = 0;
    RationalVector beta;
    RationalVector gamma;
    RationalMatrix omega;  // k x n

    void validate() const
    {
        check_dimension(n);
        if (k < 0 || k > 16) throw std::invalid_argument("ExpParams: k must be in [0, 16]");
        if (beta.size() != static_cast<std::size_t>(n) || gamma.size() != static_cast<std::size_t>(k) ||
            omega.rows() != static_cast<std::size_t>(k) || omega.cols() != static_cast<std::size_t>(n))
            throw std::invalid_argument("ExpParams: shapes inconsistent with (n, k)");
        auto positive = [](const Rational& r) { return r.sign() > 0; };
        if (!std::all_of(beta.begin(), beta.end(), positive) || !std::all_of(gamma.begin(), gamma.end(), positive) ||
            !std::all_of(omega.entries().begin(), omega.entries().end(), positive))
            throw std::invalid_argument("ExpParams: all entries must be > 0");
    }
};

/// Strictly positive probability table over {0,1}^n summing to exactly 1.
class Distribution
{
    public:
        Distribution() = default;
        Distribution(int n, RationalVector p) : n_(n), p_(std::move(p))
        {
            check_dimension(n);
            if (p_.size() != vertex_count(n)) throw std::invalid_argument("Distribution: need 2^n entries");
            Rational total = 0;
            for (const auto& x : p_) {
                if (x.sign() <= 0) throw std::invalid_argument("Distribution: entries must be > 0");
                total += x;
            }
            if (total != 1) throw std::invalid_argument("Distribution: entries must sum to 1");
        }

        /// Rescales a positive vector to total mass 1.
        static Distribution normalize(int n, RationalVector u)
        {
            Rational z = 0;
            for (const auto& x : u) z += x;
            if (z.sign() <= 0) throw std::invalid_argument("Distribution::normalize: nonpositive mass");
            for (auto& x : u) x /= z;
            return Distribution(n, std::move(u));
        }

        int dimension() const { return n_; }
        const RationalVector& probabilities() const { return p_; }
        const Rational& operator[](Vertex v) const { return p_[v]; }
        bool operator==(const Distribution&) const = default;

    private:
        int n_ = 0;
        RationalVector p_;
};

/// lambda, delta, epsilon in the open unit interval.
struct MixtureParams
{
    Rational lambda;
    RationalVector delta;
    RationalVector epsilon;

    int dimension() const { return static_cast<int>(delta.size()); }

    void validate() const
    {
        auto open_unit = [](const Rational& r) { return r.sign() > 0 && r < 1; };
        if (delta.size() != epsilon.size() || delta.empty())
            throw std::invalid_argument("MixtureParams: delta and epsilon must have equal nonzero length");
        if (!open_unit(lambda) || !std::all_of(delta.begin(), delta.end(), open_unit) ||
            !std::all_of(epsilon.begin(), epsilon.end(), open_unit))
            throw std::invalid_argument("MixtureParams: parameters must lie in (0, 1)");
    }
};

/// Unnormalized table beta^v prod_i (1 + gamma_i omega_i^v).
inline RationalVector unnormalized_factored(const ExpParams& e)
{
    RationalVector u(vertex_count(e.n));
    for (Vertex v = 0; v < vertex_count(e.n); ++v) {
        Rational x = 1;
        for (int j = 0; j < e.n; ++j)
            if (coordinate(v, j, e.n)) x *= e.beta[j];
        for (int i = 0; i < e.k; ++i) {
            Rational m = e.gamma[i];
            for (int j = 0; j < e.n; ++j)
                if (coordinate(v, j, e.n)) m *= e.omega(i, j);
            x *= 1 + m;
        }
        u[v] = x;
    }
    return u;
}

/// Normalized sum over h of psi(v, h) = beta^v gamma^h prod omega_ij^(h_i v_j).
inline Distribution joint_distribution_raw(const ExpParams& e)
{
    e.validate();
    RationalVector u(vertex_count(e.n));
    for (Vertex v = 0; v < vertex_count(e.n); ++v) {
        for (Vertex h = 0; h < vertex_count(e.k); ++h) {
            Rational psi = 1;
            for (int j = 0; j < e.n; ++j)
                if (coordinate(v, j, e.n)) psi *= e.beta[j];
            for (int i = 0; i < e.k; ++i) {
                if (!coordinate(h, i, e.k)) continue;
                psi *= e.gamma[i];
                for (int j = 0; j < e.n; ++j)
                    if (coordinate(v, j, e.n)) psi *= e.omega(i, j);
            }
            u[v] += psi;
        }
    }
    return Distribution::normalize(e.n, std::move(u));
}

/// Factored formula, cross-checked against the raw sum over hidden states.
inline Distribution joint_distribution(const ExpParams& e)
{
    e.validate();
    auto p = Distribution::normalize(e.n, unnormalized_factored(e));
    if (p != joint_distribution_raw(e))
        throw std::logic_error("joint_distribution: factored formula disagrees with the raw psi sum");
    return p;
}

inline Distribution mixture_distribution(const MixtureParams& m)
{
    m.validate();
    const int n = m.dimension();
    RationalVector p(vertex_count(n));
    for (Vertex v = 0; v < vertex_count(n); ++v) {
        Rational a = m.lambda, b = 1 - m.lambda;
        for (int i = 0; i < n; ++i) {
            const bool one = coordinate(v, i, n);
            a *= one ? 1 - m.delta[i] : m.delta[i];
            b *= one ? 1 - m.epsilon[i] : m.epsilon[i];
        }
        p[v] = a + b;
    }
    return Distribution(n, std::move(p));
}

/**
 * Mixture -> exp-domain (k = 1):
 *   beta_i  = (1 - delta_i) / delta_i
 *   omega_i = delta_i / (1 - delta_i) * (1 - epsilon_i) / epsilon_i
 *   gamma   = Z (1 - lambda) prod epsilon_i,   Z = (lambda prod delta_i)^-1
 */
inline ExpParams reparameterize(const MixtureParams& m)
{
    m.validate();
    const int n = m.dimension();
    ExpParams e;
    e.n = n;
    e.k = 1;
    e.omega = RationalMatrix(1, static_cast<std::size_t>(n));
    Rational prod_delta = 1, prod_eps = 1;
    for (int i = 0; i < n; ++i) {
        e.beta.push_back((1 - m.delta[i]) / m.delta[i]);
        e.omega(0, i) = m.delta[i] / (1 - m.delta[i]) * (1 - m.epsilon[i]) / m.epsilon[i];
        prod_delta *= m.delta[i];
        prod_eps *= m.epsilon[i];
    }
    const Rational Z = 1 / (m.lambda * prod_delta);
    e.gamma = {Z * (1 - m.lambda) * prod_eps};
    return e;
}

/// r(v) = p(v) q(v) / sum_w p(w) q(w).
inline Distribution hadamard_product(const Distribution& p, const Distribution& q)
{
    if (p.dimension() != q.dimension()) throw std::invalid_argument("hadamard_product: dimension mismatch");
    RationalVector u(vertex_count(p.dimension()));
    for (Vertex v = 0; v < u.size(); ++v) u[v] = p[v] * q[v];
    return Distribution::normalize(p.dimension(), std::move(u));
}

/// 1-based coordinate set -> sorted 0-based list, validated against n.
inline std::vector<int> checked_split(const std::vector<int>& a_set, int n)
{
    std::vector<int> a;
    for (int i : a_set) {
        if (i < 1 || i > n) throw std::invalid_argument("flattening: coordinate index out of range");
        a.push_back(i - 1);
    }
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
        throw std::invalid_argument("flattening: repeated coordinate index");
    if (a.empty() || static_cast<int>(a.size()) >= n)
        throw std::invalid_argument("flattening: split must be nonempty and proper");
    return a;
}

/// Vertex whose A-coordinates read `row` and B-coordinates read `col` (both lexicographic).
inline Vertex split_vertex(const std::vector<int>& a, int n, std::size_t row, std::size_t col)
{
    std::vector<int> b;
    for (int j = 0; j < n; ++j)
        if (!std::binary_search(a.begin(), a.end(), j)) b.push_back(j);
    Vertex v = 0;
    for (std::size_t t = 0; t < a.size(); ++t)
        if ((row >> (a.size() - 1 - t)) & 1u) v |= Vertex{1} << (n - 1 - a[t]);
    for (std::size_t t = 0; t < b.size(); ++t)
        if ((col >> (b.size() - 1 - t)) & 1u) v |= Vertex{1} << (n - 1 - b[t]);
    return v;
}

/// 2^|A| x 2^|B| matrix of p, rows indexed by {0,1}^A and columns by {0,1}^B.
inline RationalMatrix flattening(const Distribution& p, const std::vector<int>& a_set)
{
    const int n = p.dimension();
    const auto a = checked_split(a_set, n);
    const std::size_t rows = std::size_t{1} << a.size(), cols = std::size_t{1} << (n - a.size());
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = p[split_vertex(a, n, r, c)];
    return m;
}

/// All nontrivial splits A | B with coordinate 1 in A (1-based coordinates).
inline std::vector<std::vector<int>> nontrivial_splits(int n, std::size_t min_side = 1)
{
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> a{1};
        for (int j = 2; j <= n; ++j)
            if ((mask >> (j - 2)) & 1u) a.push_back(j);
        if (a.size() < min_side || static_cast<std::size_t>(n) - a.size() < min_side) continue;
        out.push_back(std::move(a));
    }
    return out;
}

inline std::size_t max_flattening_rank(const Distribution& p)
{
    const int n = p.dimension();
    if (n > 6) throw std::invalid_argument("max_flattening_rank supports n <= 6");
    std::size_t best = 0;
    for (const auto& a : nontrivial_splits(n)) best = std::max(best, rank(flattening(p, a)));
    return best;
}

/// sigma_ij = E[X_i X_j] - E[X_i] E[X_j] from exact marginals.
inline RationalMatrix covariance_matrix(const Distribution& p)
{
    const int n = p.dimension();
    RationalVector mean(static_cast<std::size_t>(n));
    RationalMatrix second(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (Vertex v = 0; v < vertex_count(n); ++v)
        for (int i = 0; i < n; ++i) {
            if (!coordinate(v, i, n)) continue;
            mean[i] += p[v];
            for (int j = 0; j < n; ++j)
                if (coordinate(v, j, n)) second(i, j) += p[v];
        }
    RationalMatrix sigma(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sigma(i, j) = second(i, j) - mean[i] * mean[j];
    return sigma;
}

/// sigma_ij as the 2x2 determinant of the (X_i, X_j) marginal table (i != j, 1-based).
inline Rational covariance_by_determinant(const Distribution& p, int i, int j)
{
    const int n = p.dimension();
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("covariance_by_determinant: bad pair");
    Rational t[2][2];
    for (Vertex v = 0; v < vertex_count(n); ++v) t[coordinate(v, i - 1, n)][coordinate(v, j - 1, n)] += p[v];
    return t[0][0] * t[1][1] - t[0][1] * t[1][0];
}

struct NecessaryConditionReport
{
    bool flattening_rank_ok = true;
    bool triple_sign_ok = true;
    bool covariance_binomial_ok = true;
    std::size_t max_flattening_rank = 0;
    bool pass() const { return flattening_rank_ok && triple_sign_ok && covariance_binomial_ok; }
    static constexpr const char* scope = "necessary only";
};

/**
 * Necessary conditions for membership in the one-hidden-node model: every
 * flattening has rank <= 2, sigma_ij sigma_ik sigma_jk >= 0 for all triples
 * and sigma_ij sigma_kl = sigma_ik sigma_jl = sigma_il sigma_jk for all
 * quadruples.  Passing does not certify membership.
 */
inline NecessaryConditionReport check_membership_necessary(const Distribution& p)
{
    NecessaryConditionReport r;
    const int n = p.dimension();
    if (n >= 2) {
        r.max_flattening_rank = max_flattening_rank(p);
        r.flattening_rank_ok = r.max_flattening_rank <= 2;
    }
    const auto s = covariance_matrix(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if ((s(i, j) * s(i, k) * s(j, k)).sign() < 0) r.triple_sign_ok = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const Rational a = s(i, j) * s(k, l), b = s(i, k) * s(j, l), c = s(i, l) * s(j, k);
                    if (a != b || a != c) r.covariance_binomial_ok = false;
                }
    return r;
}

template <class Rng>
ExpParams random_exp_params(int n, int k, Rng& rng, int bound = 20)
{
    ExpParams e;
    e.n = n;
    e.k = k;
    e.omega = RationalMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) e.beta.push_back(random_positive_rational(rng, bound));
    for (int i = 0; i < k; ++i) {
        e.gamma.push_back(random_positive_rational(rng, bound));
        for (int j = 0; j < n; ++j) e.omega(i, j) = random_positive_rational(rng, bound);
    }
    return e;
}

/// p/q with 1 <= p < q <= bound.
template <class Rng>
Rational random_unit_rational(Rng& rng, int bound = 20)
{
    std::uniform_int_distribution<int> den(2, bound);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(1, q - 1);
    return Rational(num(rng), q);
}

template <class Rng>
MixtureParams random_mixture_params(int n, Rng& rng, int bound = 20)
{
    MixtureParams m;
    m.lambda = random_unit_rational(rng, bound);
    for (int i = 0; i < n; ++i) {
        m.delta.push_back(random_unit_rational(rng, bound));
        m.epsilon.push_back(random_unit_rational(rng, bound));
    }
    return m;
}

/// Distribution file: 2^n rationals `p/q`, one per line, lexicographic v order.
inline std::string format_distribution(const Distribution& p)
{
    std::string out;
    for (const auto& x : p.probabilities()) out += to_string(x) + "\n";
    return out;
}

inline Distribution parse_distribution(const std::string& text)
{
    std::istringstream in(text);
    RationalVector values;
    for (std::string line; std::getline(in, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        values.push_back(parse_rational(line));
    }
    const std::size_t m = values.size();
    if (m < 2 || (m & (m - 1)) != 0) throw std::invalid_argument("distribution file must hold 2^n values, n >= 1");
    return Distribution(std::countr_zero(m), std::move(values));
}

}  // namespace rbmtrop
