/**
 * Sparse integer polynomials in the coordinates p_v, their initial forms
 * under a weight vector (terms of maximal weight), the 3x3 minors of the
 * symbolic flattenings, and the 2x2x2x2 prevariety-vs-variety witness.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube.hpp"
#include "rational.hpp"
#include "statistics.hpp"

namespace rbmtrop {

struct Term
{
    long long coeff = 0;
    std::map<Vertex, int> exponents;  ///< vertex index -> positive exponent

    int degree() const
    {
        int d = 0;
        for (const auto& [v, e] : exponents) d += e;
        return d;
    }
};

class SparsePolynomial
{
    public:
        SparsePolynomial() = default;

        /// Combines repeated monomials and drops zero coefficients.
        SparsePolynomial(int n, const std::vector<Term>& terms) : n_(n)
        {
            check_dimension(n);
            std::map<std::map<Vertex, int>, long long> acc;
            for (const auto& t : terms) {
                for (const auto& [v, e] : t.exponents)
                    if (v >= vertex_count(n) || e <= 0)
                        throw std::invalid_argument("SparsePolynomial: bad variable or exponent");
                acc[t.exponents] += t.coeff;
            }
            for (auto& [mono, c] : acc)
                if (c != 0) terms_.push_back({c, mono});
        }

        int dimension() const { return n_; }
        const std::vector<Term>& terms() const { return terms_; }
        std::size_t size() const { return terms_.size(); }
        bool is_zero() const { return terms_.empty(); }
        bool operator==(const SparsePolynomial& o) const
        {
            if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
            for (std::size_t i = 0; i < terms_.size(); ++i)
                if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].exponents != o.terms_[i].exponents) return false;
            return true;
        }

    private:
        int n_ = 0;
        std::vector<Term> terms_;
};

inline Rational term_weight(const Term& t, const RationalVector& w)
{
    Rational s = 0;
    for (const auto& [v, e] : t.exponents) s += e * w[v];
    return s;
}

/// Sub-sum of the terms attaining the maximal w-weight.
inline SparsePolynomial initial_form(const SparsePolynomial& f, const RationalVector& w)
{
    if (f.is_zero()) throw std::invalid_argument("initial_form: zero polynomial");
    if (w.size() != vertex_count(f.dimension())) throw std::invalid_argument("initial_form: weight length != 2^n");
    Rational best = term_weight(f.terms().front(), w);
    for (const auto& t : f.terms()) best = std::max(best, term_weight(t, w));
    std::vector<Term> kept;
    for (const auto& t : f.terms())
        if (term_weight(t, w) == best) kept.push_back(t);
    return SparsePolynomial(f.dimension(), kept);
}

/// Maximal term weight of f under w.
inline Rational initial_weight(const SparsePolynomial& f, const RationalVector& w)
{
    Rational best = term_weight(f.terms().front(), w);
    for (const auto& t : f.terms()) best = std::max(best, term_weight(t, w));
    return best;
}

/// All 3x3 minors of the symbolic 2^|A| x 2^|B| flattening; empty if a side has fewer than 2 coordinates.
inline std::vector<SparsePolynomial> flattening_minors(int n, const std::vector<int>& a_set)
{
    const auto a = checked_split(a_set, n);
    if (a.size() < 2 || n - a.size() < 2) return {};
    const std::size_t rows = std::size_t{1} << a.size(), cols = std::size_t{1} << (n - a.size());
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int perm_sign[6] = {1, -1, -1, 1, 1, -1};
    std::vector<SparsePolynomial> out;
    for (std::size_t r0 = 0; r0 < rows; ++r0)
        for (std::size_t r1 = r0 + 1; r1 < rows; ++r1)
            for (std::size_t r2 = r1 + 1; r2 < rows; ++r2)
                for (std::size_t c0 = 0; c0 < cols; ++c0)
                    for (std::size_t c1 = c0 + 1; c1 < cols; ++c1)
                        for (std::size_t c2 = c1 + 1; c2 < cols; ++c2) {
                            const std::size_t r[3] = {r0, r1, r2}, c[3] = {c0, c1, c2};
                            std::vector<Term> terms;
                            for (int s = 0; s < 6; ++s) {
                                Term t{perm_sign[s], {}};
                                for (int i = 0; i < 3; ++i) t.exponents[split_vertex(a, n, r[i], c[perms[s][i]])] += 1;
                                terms.push_back(std::move(t));
                            }
                            out.emplace_back(n, terms);
                        }
    return out;
}

/// Minors of every flattening whose two sides both have at least 2 coordinates.
inline std::vector<SparsePolynomial> all_flattening_minors(int n)
{
    std::vector<SparsePolynomial> out;
    for (const auto& a : nontrivial_splits(n, 2)) {
        auto m = flattening_minors(n, a);
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

struct PrevarietyResult
{
    bool member = true;
    std::optional<std::size_t> failing_index;  ///< into all_flattening_minors(n)
    std::optional<SparsePolynomial> failing_minor;
    std::size_t minors_checked = 0;
};

/// q lies in the prevariety of all flattening 3x3 minors iff no minor has a monomial initial form.
inline PrevarietyResult prevariety_member(const RationalVector& q, int n)
{
    if (q.size() != vertex_count(n)) throw std::invalid_argument("prevariety_member: weight length != 2^n");
    PrevarietyResult r;
    const auto minors = all_flattening_minors(n);
    r.minors_checked = minors.size();
    for (std::size_t i = 0; i < minors.size(); ++i) {
        if (initial_form(minors[i], q).size() < 2) {
            r.member = false;
            r.failing_index = i;
            r.failing_minor = minors[i];
            return r;
        }
    }
    return r;
}

/// The weight vector in the relative interior of a maximal prevariety cone outside TV^1_4.
inline RationalVector witness_2222_weight()
{
    static const int q[16] = {59, 1, 80, 86, 102, 108, 107, 113, 109, 115, 100, 106, 78, 84, 21, 43};
    return RationalVector(std::begin(q), std::end(q));
}

/// The 8-term quartic in the ideal of V^1_4, signs as printed.
inline SparsePolynomial witness_2222_quartic()
{
    auto mono = [](long long c, std::initializer_list<const char*> vars) {
        Term t{c, {}};
        for (const char* v : vars) t.exponents[parse_vertex(v)] += 1;
        return t;
    };
    return SparsePolynomial(4, {
        mono(+1, {"0000", "0110", "1010", "1101"}),
        mono(-1, {"0010", "0100", "1000", "1111"}),
        mono(+1, {"0010", "0100", "1001", "1110"}),
        mono(-1, {"0000", "0110", "1001", "1110"}),
        mono(-1, {"0001", "0110", "1010", "1100"}),
        mono(+1, {"0000", "0010", "1100", "1111"}),
        mono(-1, {"0000", "0010", "1101", "1110"}),
        mono(+1, {"0001", "0110", "1000", "1110"}),
    });
}

struct WitnessReport
{
    bool prevariety = false;
    std::size_t minors_checked = 0;
    SparsePolynomial quartic_initial_form;
    Rational quartic_initial_weight;
    bool quartic_monomial() const { return quartic_initial_form.size() == 1; }
    /// In the prevariety yet cut off by a polynomial of the ideal.
    bool separates() const { return prevariety && quartic_monomial(); }
};

inline WitnessReport quartic_witness_check(const RationalVector& q = witness_2222_weight())
{
    WitnessReport r;
    const auto pv = prevariety_member(q, 4);
    r.prevariety = pv.member;
    r.minors_checked = pv.minors_checked;
    const auto f = witness_2222_quartic();
    r.quartic_initial_form = initial_form(f, q);
    r.quartic_initial_weight = initial_weight(f, q);
    return r;
}

inline std::string format_monomial(const Term& t, int n)
{
    std::string out;
    for (const auto& [v, e] : t.exponents) {
        if (!out.empty()) out += " ";
        out += "p_" + vertex_string(v, n);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

/// Polynomial file: one term per line, `<coeff> * p_<bits>[^e] ...`.
inline std::string format_polynomial(const SparsePolynomial& f)
{
    std::string out;
    for (const auto& t : f.terms()) out += std::to_string(t.coeff) + " * " + format_monomial(t, f.dimension()) + "\n";
    return out;
}

inline SparsePolynomial parse_polynomial(const std::string& text)
{
    std::istringstream in(text);
    std::vector<Term> terms;
    int n = -1;
    for (std::string line; std::getline(in, line);) {
        std::istringstream ls(line);
        std::string coeff, star;
        if (!(ls >> coeff)) continue;
        if (!(ls >> star) || star != "*") throw std::invalid_argument("polynomial line must read '<coeff> * p_...': " + line);
        Term t{std::stoll(coeff), {}};
        for (std::string var; ls >> var;) {
            if (var.rfind("p_", 0) != 0) throw std::invalid_argument("bad variable '" + var + "'");
            int e = 1;
            std::string bits = var.substr(2);
            if (const auto caret = bits.find('^'); caret != std::string::npos) {
                e = std::stoi(bits.substr(caret + 1));
                bits = bits.substr(0, caret);
            }
            if (n < 0) n = static_cast<int>(bits.size());
            if (static_cast<int>(bits.size()) != n) throw std::invalid_argument("variables of differing length");
            t.exponents[parse_vertex(bits)] += e;
        }
        if (t.exponents.empty()) throw std::invalid_argument("term without variables: " + line);
        terms.push_back(std::move(t));
    }
    if (n < 0) throw std::invalid_argument("empty polynomial file");
    return SparsePolynomial(n, terms);
}

}  // namespace rbmtrop
