/**
 * Exact primal simplex (Bland's rule) and a strict-feasibility oracle for
 * homogeneous systems of linear relations.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace rbmtrop {

/**
 * maximize c.x  subject to  A x <= b,  x >= 0.
 *
 * Dense tableau in the layout of the KACTL simplex, with exact arithmetic and
 * Bland's smallest-index rule for both entering and leaving variables, so it
 * terminates on degenerate problems.
 */
class ExactSimplex
{
    public:
        enum class Status { optimal, infeasible, unbounded };

        struct Result
        {
            Status status;
            Rational value;
            RationalVector x;
        };

        ExactSimplex(const std::vector<RationalVector>& A, const RationalVector& b, const RationalVector& c)
            : m_(b.size()), n_(c.size()), N_(n_ + 1), B_(m_), D_(m_ + 2, RationalVector(n_ + 2))
        {
            if (A.size() != m_) throw std::invalid_argument("ExactSimplex: |A| != |b|");
            for (std::size_t i = 0; i < m_; ++i) {
                if (A[i].size() != n_) throw std::invalid_argument("ExactSimplex: row length != |c|");
                for (std::size_t j = 0; j < n_; ++j) D_[i][j] = A[i][j];
                B_[i] = static_cast<long>(n_ + i);
                D_[i][n_] = -1;
                D_[i][n_ + 1] = b[i];
            }
            for (std::size_t j = 0; j < n_; ++j) {
                N_[j] = static_cast<long>(j);
                D_[m_][j] = -c[j];
            }
            N_[n_] = -1;
            D_[m_ + 1][n_] = 1;
        }

        Result solve()
        {
            std::size_t r = 0;
            for (std::size_t i = 1; i < m_; ++i)
                if (D_[i][n_ + 1] < D_[r][n_ + 1]) r = i;
            if (m_ > 0 && D_[r][n_ + 1].sign() < 0) {
                pivot(r, n_);
                if (!run(2) || D_[m_ + 1][n_ + 1].sign() < 0)
                    return {Status::infeasible, 0, {}};
                for (std::size_t i = 0; i < m_; ++i) {
                    if (B_[i] != -1) continue;
                    // Artificial variable still basic at level zero: swap it out.
                    std::optional<std::size_t> s;
                    for (std::size_t j = 0; j <= n_; ++j)
                        if (D_[i][j].sign() != 0 && (!s || N_[j] < N_[*s])) s = j;
                    if (s) pivot(i, *s);
                }
            }
            if (!run(1)) return {Status::unbounded, 0, {}};
            RationalVector x(n_);
            for (std::size_t i = 0; i < m_; ++i)
                if (B_[i] >= 0 && static_cast<std::size_t>(B_[i]) < n_) x[B_[i]] = D_[i][n_ + 1];
            return {Status::optimal, D_[m_][n_ + 1], std::move(x)};
        }

    private:
        void pivot(std::size_t r, std::size_t s)
        {
            const Rational inv = 1 / D_[r][s];
            for (std::size_t i = 0; i < m_ + 2; ++i) {
                if (i == r || D_[i][s].sign() == 0) continue;
                const Rational f = D_[i][s] * inv;
                for (std::size_t j = 0; j < n_ + 2; ++j)
                    if (j != s && D_[r][j].sign() != 0) D_[i][j] -= D_[r][j] * f;
                D_[i][s] = -f;
            }
            for (std::size_t j = 0; j < n_ + 2; ++j)
                if (j != s) D_[r][j] *= inv;
            D_[r][s] = inv;
            std::swap(B_[r], N_[s]);
        }

        // phase 2 optimizes the auxiliary row (feasibility), phase 1 the objective.
        bool run(int phase)
        {
            const std::size_t x = phase == 1 ? m_ : m_ + 1;
            for (;;) {
                std::optional<std::size_t> s;
                for (std::size_t j = 0; j <= n_; ++j) {
                    if (N_[j] == -phase) continue;
                    if (D_[x][j].sign() < 0 && (!s || N_[j] < N_[*s])) s = j;
                }
                if (!s) return true;
                std::optional<std::size_t> r;
                for (std::size_t i = 0; i < m_; ++i) {
                    if (D_[i][*s].sign() <= 0) continue;
                    if (!r) { r = i; continue; }
                    const Rational lhs = D_[i][n_ + 1] * D_[*r][*s];
                    const Rational rhs = D_[*r][n_ + 1] * D_[i][*s];
                    if (lhs < rhs || (lhs == rhs && B_[i] < B_[*r])) r = i;
                }
                if (!r) return false;
                pivot(*r, *s);
            }
        }

        std::size_t m_, n_;
        std::vector<long> N_, B_;
        std::vector<RationalVector> D_;
};

/**
 * Homogeneous system of relations  a.x > 0,  a.x >= 0,  a.x = 0.  Affine
 * constraints are expressed by adding a homogenizing coordinate with its own
 * strict row.
 */
struct LinearSystem
{
    std::vector<RationalVector> strict_rows;
    std::vector<RationalVector> weak_rows;
    std::vector<RationalVector> equality_rows;

    std::size_t dimension() const
    {
        for (const auto* rows : {&strict_rows, &weak_rows, &equality_rows})
            if (!rows->empty()) return rows->front().size();
        return 0;
    }

    std::size_t row_count() const { return strict_rows.size() + weak_rows.size() + equality_rows.size(); }

    /// Throws std::invalid_argument if the system is empty or ragged.
    void validate() const
    {
        if (row_count() == 0) throw std::invalid_argument("LinearSystem: no rows");
        const std::size_t d = dimension();
        for (const auto* rows : {&strict_rows, &weak_rows, &equality_rows})
            for (const auto& row : *rows)
                if (row.size() != d) throw std::invalid_argument("LinearSystem: rows differ in length");
    }

    /// Direct evaluation of every relation at x.
    bool satisfied_by(const RationalVector& x) const
    {
        auto eval = [&](const RationalVector& a) {
            Rational s = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i].sign() != 0) s += a[i] * x[i];
            return s.sign();
        };
        if (x.size() != dimension()) return false;
        for (const auto& a : strict_rows)
            if (eval(a) <= 0) return false;
        for (const auto& a : weak_rows)
            if (eval(a) < 0) return false;
        for (const auto& a : equality_rows)
            if (eval(a) != 0) return false;
        return true;
    }
};

/**
 * Exact strict feasibility.  Maximizes a margin t (capped at 1) with strict
 * rows relaxed to a.x >= t, over the box |x_i| <= B where B = 2(d + 1).  The
 * system is feasible iff the optimum has t > 0; the returned point then
 * satisfies every strict row strictly.
 */
inline std::optional<RationalVector> solve_feasibility(const LinearSystem& sys)
{
    sys.validate();
    const std::size_t d = sys.dimension();
    const Rational bound = Rational(2 * (static_cast<long>(d) + 1));

    // Variables: u (d), w (d), t with x = u - w.  All right-hand sides are
    // nonnegative, so the origin is a feasible basis.
    const std::size_t nv = 2 * d + 1;
    std::vector<RationalVector> A;
    RationalVector b;
    auto push = [&](const RationalVector& a, const Rational& sgn, bool with_t) {
        RationalVector row(nv);
        for (std::size_t i = 0; i < d; ++i) {
            row[i] = -sgn * a[i];
            row[d + i] = sgn * a[i];
        }
        if (with_t) row[2 * d] = 1;
        A.push_back(std::move(row));
        b.push_back(0);
    };
    for (const auto& a : sys.strict_rows) push(a, 1, true);
    for (const auto& a : sys.weak_rows) push(a, 1, false);
    for (const auto& a : sys.equality_rows) {
        push(a, 1, false);
        push(a, -1, false);
    }
    for (std::size_t i = 0; i < 2 * d + 1; ++i) {
        RationalVector row(nv);
        row[i] = 1;
        A.push_back(std::move(row));
        b.push_back(i == 2 * d ? Rational(1) : bound);
    }
    RationalVector c(nv);
    c[2 * d] = 1;

    auto result = ExactSimplex(A, b, c).solve();
    if (result.status != ExactSimplex::Status::optimal)
        throw std::logic_error("solve_feasibility: bounded margin program did not reach an optimum");
    if (!sys.strict_rows.empty() && result.value.sign() <= 0) return std::nullopt;

    RationalVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = result.x[i] - result.x[d + i];
    if (!sys.satisfied_by(x))
        throw std::logic_error("solve_feasibility: witness fails direct re-check");
    return x;
}

}  // namespace rbmtrop
