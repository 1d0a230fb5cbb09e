#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <rbmtrop/statistics.hpp>
#include <rbmtrop/trop_poly.hpp>
#include <rbmtrop/trop_rbm.hpp>

using namespace rbmtrop;

namespace {

Rational evaluate(const SparsePolynomial& f, const RationalVector& p)
{
    Rational total = 0;
    for (const auto& t : f.terms()) {
        Rational x = Rational(t.coeff);
        for (const auto& [v, e] : t.exponents)
            for (int i = 0; i < e; ++i) x *= p[v];
        total += x;
    }
    return total;
}

Rational abs_value(const Rational& x) { return x.sign() < 0 ? -x : x; }

// Absolute values of every 3x3 minor of a numeric matrix.
std::multiset<Rational> numeric_minors(const RationalMatrix& m)
{
    std::multiset<Rational> out;
    const std::size_t r = m.rows(), c = m.cols();
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            for (std::size_t d = b + 1; d < r; ++d)
                for (std::size_t x = 0; x < c; ++x)
                    for (std::size_t y = x + 1; y < c; ++y)
                        for (std::size_t z = y + 1; z < c; ++z) {
                            RationalMatrix s(3, 3);
                            const std::size_t rows[3] = {a, b, d}, cols[3] = {x, y, z};
                            for (int i = 0; i < 3; ++i)
                                for (int j = 0; j < 3; ++j) s(i, j) = m(rows[i], cols[j]);
                            out.insert(abs_value(determinant(s)));
                        }
    return out;
}

Term monomial(long long c, std::initializer_list<const char*> vars)
{
    Term t{c, {}};
    for (const char* v : vars) t.exponents[parse_vertex(v)] += 1;
    return t;
}

}  // namespace

TEST_CASE("initial form examples")
{
    const SparsePolynomial mono(2, {monomial(3, {"01", "10"})});
    CHECK(initial_form(mono, {5, 1, 2, 0}) == mono);

    const SparsePolynomial sum(2, {monomial(1, {"01"}), monomial(1, {"10"})});
    CHECK(initial_form(sum, {0, 4, 4, 0}).size() == 2);
    CHECK(initial_form(sum, {0, 4, 5, 0}).size() == 1);

    const auto q = witness_2222_weight();
    REQUIRE(q.size() == 16);
    const Rational expected = q[parse_vertex("0000")] + q[parse_vertex("0110")] + q[parse_vertex("1010")] +
                              q[parse_vertex("1101")];
    CHECK(expected == 350);
    const auto in = initial_form(witness_2222_quartic(), q);
    REQUIRE(in.size() == 1);
    CHECK(format_monomial(in.terms()[0], 4) == "p_0000 p_0110 p_1010 p_1101");
    CHECK(initial_weight(witness_2222_quartic(), q) == 350);
}

TEST_CASE("polynomials combine repeated monomials")
{
    const SparsePolynomial f(2, {monomial(2, {"00"}), monomial(-2, {"00"}), monomial(1, {"11", "11"})});
    REQUIRE(f.size() == 1);
    CHECK(f.terms()[0].exponents.at(3) == 2);
    CHECK_THROWS_AS(SparsePolynomial(2, {monomial(1, {"00"}), Term{1, {{9, 1}}}}), std::invalid_argument);
}

TEST_CASE("flattening minor counts")
{
    CHECK(flattening_minors(4, {1, 2}).size() == 16);
    CHECK(all_flattening_minors(4).size() == 48);
    for (const auto& a : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {1, 3}})
        CHECK(flattening_minors(3, a).empty());
}

TEST_CASE("minors are six-term cubics with unit coefficients")
{
    for (const auto& f : all_flattening_minors(4)) {
        REQUIRE(f.size() == 6);
        for (const auto& t : f.terms()) {
            CHECK((t.coeff == 1 || t.coeff == -1));
            CHECK(t.degree() == 3);
        }
    }
}

TEST_CASE("symbolic minors evaluate to the numeric 3x3 minors of the flattening")
{
    std::mt19937_64 rng(41);
    const auto p = joint_distribution(random_exp_params(4, 3, rng));
    for (const auto& a : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}}) {
        std::multiset<Rational> symbolic;
        for (const auto& f : flattening_minors(4, a)) symbolic.insert(abs_value(evaluate(f, p.probabilities())));
        CHECK(symbolic == numeric_minors(flattening(p, a)));
    }
}

TEST_CASE("minors and the quartic vanish on one-hidden-node distributions")
{
    std::mt19937_64 rng(42);
    const auto minors = all_flattening_minors(4);
    const auto quartic = witness_2222_quartic();
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = mixture_distribution(random_mixture_params(4, rng)).probabilities();
        for (const auto& f : minors) CHECK(evaluate(f, p) == 0);
        CHECK(evaluate(quartic, p) == 0);
    }
    const auto p3 = joint_distribution(random_exp_params(4, 3, rng)).probabilities();
    CHECK(evaluate(quartic, p3) != 0);
}

TEST_CASE("initial forms are idempotent and ignore the all-ones direction")
{
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> dist(-3, 3);
    const auto minors = all_flattening_minors(4);
    for (int trial = 0; trial < 30; ++trial) {
        RationalVector w(16), shifted(16);
        const Rational s = random_rational(rng, 9, true);
        for (std::size_t i = 0; i < 16; ++i) {
            w[i] = dist(rng);
            shifted[i] = w[i] + s;
        }
        for (const auto& f : minors) {
            const auto in = initial_form(f, w);
            CHECK(initial_form(in, w) == in);
            CHECK(initial_form(f, shifted) == in);
            CHECK(initial_weight(f, shifted) == initial_weight(f, w) + 3 * s);
        }
    }
}

TEST_CASE("prevariety membership")
{
    const auto r = prevariety_member(witness_2222_weight(), 4);
    CHECK(r.member);
    CHECK(r.minors_checked == 48);

    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        const auto q = phi(random_trop_params(4, 1, rng)).coords();
        CHECK(prevariety_member(q, 4).member);
    }

    // small integer weights until some minor has a monomial initial form
    std::uniform_int_distribution<int> dist(0, 2);
    std::optional<RationalVector> outside;
    for (int trial = 0; trial < 1000 && !outside; ++trial) {
        RationalVector q(16);
        for (auto& x : q) x = dist(rng);
        if (!prevariety_member(q, 4).member) outside = q;
    }
    REQUIRE(outside);
    const auto bad = prevariety_member(*outside, 4);
    REQUIRE(bad.failing_minor);
    CHECK(initial_form(*bad.failing_minor, *outside).size() == 1);
    CHECK(all_flattening_minors(4)[*bad.failing_index] == *bad.failing_minor);
}

TEST_CASE("quartic witness")
{
    const auto r = quartic_witness_check();
    CHECK(r.prevariety);
    CHECK(r.quartic_monomial());
    CHECK(r.separates());
    CHECK(r.quartic_initial_weight == 350);
    CHECK(witness_2222_quartic().size() == 8);

    const auto flat = quartic_witness_check(RationalVector(16));
    CHECK(flat.quartic_initial_form.size() == 8);
    CHECK_FALSE(flat.separates());

    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        const auto q = phi(random_generic_trop_params(4, 1, rng)).coords();
        const auto w = quartic_witness_check(q);
        CHECK(w.prevariety);
        CHECK(w.quartic_initial_form.size() >= 2);
    }
}

TEST_CASE("polynomial files round-trip")
{
    const auto f = witness_2222_quartic();
    const auto text = format_polynomial(f);
    CHECK(parse_polynomial(text) == f);
    CHECK(format_polynomial(SparsePolynomial(2, {monomial(-2, {"01", "01", "10"})})) == "-2 * p_01^2 p_10\n");
    CHECK(parse_polynomial("3 * p_01^2 p_10\n").terms()[0].exponents.at(1) == 2);
    CHECK_THROWS_AS(parse_polynomial("3 p_01\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("1 * p_01 p_100\n"), std::invalid_argument);
}
