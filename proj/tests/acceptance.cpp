/**
 * Acceptance run: one PASS/FAIL line per criterion, each with its wall-clock
 * budget.  Exit status is nonzero if any criterion fails.  Pass --long to add
 * the n = 5 threshold-function census.
 */
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <rbmtrop/rbmtrop.hpp>

using namespace rbmtrop;

namespace {

struct Outcome
{
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what)
    {
        if (!condition) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body)
{
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > limit_seconds) {
        out.ok = false;
        out.detail << " [over time limit]";
    }
    if (!out.ok) ++failures;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name << "  (" << std::fixed
              << std::setprecision(2) << elapsed << " s / limit " << std::setprecision(0) << limit_seconds << " s)"
              << out.detail.str() << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

int main(int argc, char** argv)
{
    const bool long_mode = argc > 1 && std::strcmp(argv[1], "--long") == 0;
    const unsigned threads = default_thread_count();

    criterion(1, "threshold-function counts 4, 14, 104, 1882", 600, [&](Outcome& o) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t expected[] = {4, 14, 104};
        for (int n = 1; n <= 3; ++n) {
            const auto c = enumerate_slicings(n, SlicingStrategy::arrangement, threads).size();
            o.detail << " n=" << n << ":" << c;
            o.expect(c == expected[n - 1], "count n=" + std::to_string(n));
        }
        o.expect(seconds_since(t0) < 10, "n <= 3 within 10 s");
        const auto c4 = enumerate_slicings(4, SlicingStrategy::arrangement, threads).size();
        o.detail << " n=4:" << c4;
        o.expect(c4 == 1882, "count n=4");
        if (long_mode) {
            const auto c5 = enumerate_slicings(5, SlicingStrategy::arrangement, threads).size();
            o.detail << " n=5:" << c5;
            o.expect(c5 == 94572, "count n=5");
        }
    });

    criterion(2, "zonotope facets 4, 12, 40, 280", 60, [&](Outcome& o) {
        const std::size_t expected[] = {4, 12, 40, 280};
        for (int n = 1; n <= 4; ++n) {
            const auto f = count_zonotope_facets(n);
            o.detail << " n=" << n << ":" << f;
            o.expect(f == expected[n - 1], "facets n=" + std::to_string(n));
        }
    });

    criterion(3, "exact tropical dimension for (3,1), (3,2), (4,1)", 300, [&](Outcome& o) {
        DimensionOptions opt;
        opt.strategy = DimensionStrategy::exhaustive;
        opt.threads = threads;
        const auto a = tropical_dimension(3, 1, opt);
        const auto b = tropical_dimension(3, 2, opt);
        const auto c = tropical_dimension(4, 1, opt);
        o.detail << " dims " << a.dim << " " << b.dim << " " << c.dim;
        o.expect(a.dim == 7 && a.certified, "n=3 k=1 -> 7");
        o.expect(b.dim == 7 && b.certified, "n=3 k=2 -> 7");
        o.expect(c.dim == 9 && c.certified, "n=4 k=1 -> 9");
    });

    criterion(4, "code-based dimension for n = 7, k = 15 and 16", 60, [&](Outcome& o) {
        const auto a = tropical_dimension(7, 15);
        const auto b = tropical_dimension(7, 16);
        o.detail << " ranks " << a.max_rank << " " << b.max_rank << ", dims " << a.dim << " " << b.dim;
        o.expect(a.max_rank == 127 && a.dim == 127 && a.certified, "k=15 rank 127");
        o.expect(b.max_rank == 128 && b.dim == 127 && b.certified, "k=16 rank 128, dim 127");
        o.expect(rank_bareiss(slicing_matrix(7, a.witness)) == 127, "Bareiss agrees for k=15");
    });

    criterion(5, "coding bounds and exhaustive small values", 120, [&](Outcome& o) {
        for (int ell = 2; ell <= 4; ++ell) {
            const auto c = hamming_code(ell);
            o.expect(min_distance(c) == 3, "Hamming min distance");
            o.expect(covering_radius(c) == 1, "Hamming covering radius");
        }
        o.expect(varshamov_lower(7) == 16 && covering_upper(7) == 16, "n=7 bounds are 16");
        const int a3 = exact_A2(3), k3 = exact_K2(3), a5 = exact_A2(5);
        o.detail << " A2(3,3)=" << a3 << " K2(3,1)=" << k3 << " A2(5,3)=" << a5;
        o.expect(a3 == 2 && k3 == 2 && a5 == 4, "exhaustive values");
    });

    criterion(6, "probability-side identities on 100 seeded draws", 300, [&](Outcome& o) {
        std::mt19937_64 rng(2024);
        int draws = 0;
        for (int trial = 0; trial < 100; ++trial, ++draws) {
            const int n = 1 + trial % 4, k = 1 + trial % 3;
            const auto e = random_exp_params(n, k, rng);
            o.expect(joint_distribution(e) == joint_distribution_raw(e), "factored = raw sum");

            const auto m = random_mixture_params(n, rng);
            const auto p = mixture_distribution(m);
            o.expect(joint_distribution(reparameterize(m)) == p, "mixture = reparameterized RBM");

            ExpParams stacked{n, k, RationalVector(static_cast<std::size_t>(n), 1), {},
                              RationalMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n))};
            std::optional<Distribution> product;
            for (int i = 0; i < k; ++i) {
                const auto one = random_exp_params(n, 1, rng);
                for (int j = 0; j < n; ++j) {
                    stacked.beta[j] *= one.beta[j];
                    stacked.omega(i, j) = one.omega(0, j);
                }
                stacked.gamma.push_back(one.gamma[0]);
                const auto d = joint_distribution(one);
                product = product ? hadamard_product(*product, d) : d;
            }
            o.expect(*product == joint_distribution(stacked), "Hadamard product = stacked model");

            if (n >= 2) o.expect(max_flattening_rank(p) <= 2, "flattening rank <= 2");
            const auto s = covariance_matrix(p);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int l = j + 1; l < n; ++l)
                        o.expect((s(i, j) * s(i, l) * s(j, l)).sign() >= 0, "triple product >= 0");
            if (n == 4) o.expect(s(0, 1) * s(2, 3) == s(0, 3) * s(1, 2), "sigma12 sigma34 = sigma14 sigma23");
        }
        o.detail << " draws " << draws;
    });

    criterion(7, "2222 witness: prevariety point cut off by the quartic", 5, [&](Outcome& o) {
        const auto r = quartic_witness_check();
        o.detail << " minors " << r.minors_checked << ", initial form " << r.quartic_initial_form.size()
                 << " term(s) at weight " << to_string(r.quartic_initial_weight);
        o.expect(r.minors_checked == 48, "48 minors");
        o.expect(r.prevariety, "every minor has a >= 2-term initial form");
        o.expect(r.quartic_monomial(), "quartic initial form is a monomial");
        o.expect(r.quartic_monomial() &&
                     format_monomial(r.quartic_initial_form.terms()[0], 4) == "p_0000 p_0110 p_1010 p_1101",
                 "the monomial is p0000 p0110 p1010 p1101");
    });

    criterion(8, "secondary fan of the 3-cube and the k = 1 subcomplex", 900, [&](Outcome& o) {
        const auto fan = build_secondary_fan(threads);
        std::size_t regular = 0;
        for (const auto& t : fan.triangulations) {
            const auto w = regularity_witness(t);
            if (w && regular_subdivision_from_lift(*w).cells == t.cells) ++regular;
        }
        o.expect(fan.triangulations.size() == 74 && regular == 74, "74 regular triangulations");
        const auto f = fan.fvector();
        o.expect(f == std::array<std::size_t, 4>{22, 100, 152, 74}, "sphere f-vector");
        const auto c = tm13_subcomplex(fan, threads);
        const auto cf = c.complex.fvector();
        o.expect(cf == std::vector<std::size_t>{14, 40, 36, 12}, "subcomplex f-vector");
        int corners = 0, diagonals = 0;
        for (auto t : c.vertex_types) (t == CutType::corner ? corners : diagonals)++;
        o.expect(corners == 8 && diagonals == 6, "6 D + 8 V vertices");
        int vv = 0, vd = 0, dd = 0;
        for (const auto& e : c.complex.faces_by_dim[1]) {
            const bool a = c.vertex_types[e[0]] == CutType::corner, b = c.vertex_types[e[1]] == CutType::corner;
            (a && b ? vv : (a || b) ? vd : dd)++;
        }
        o.expect(vv == 4 && vd == 24 && dd == 12, "edge census 4, 24, 12");
        const auto h = reduced_homology_ranks(c.complex);
        o.expect(h == std::vector<std::size_t>{0, 3, 0, 0}, "reduced homology (0,3,0,0)");
        o.detail << " triangulations " << fan.triangulations.size() << " (regular " << regular << "), sphere " << f[0]
                 << " " << f[1] << " " << f[2] << " " << f[3] << ", subcomplex";
        for (auto x : cf) o.detail << " " << x;
        o.detail << ", edges " << vv << "/" << vd << "/" << dd << ", homology";
        for (auto x : h) o.detail << " " << x;
    });

    criterion(9, "property suites: membership, inference, rank oracle", 300, [&](Outcome& o) {
        std::mt19937_64 rng(99);
        int round_trips = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto q = phi(random_generic_trop_params(1 + trial % 4, 1, rng, 3));
            const auto r = membership_tm1(q, threads);
            if (!r.member) continue;
            auto back = phi(r.params()).coords();
            for (auto& x : back) x += r.mu;
            if (back == q.coords()) ++round_trips;
        }
        o.expect(round_trips == 200, "200 membership round trips");

        int threshold_ok = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + trial % 3, k = 1 + trial % 3;
            const auto f = inference_function(random_generic_trop_params(n, k, rng));
            bool all = true;
            for (int i = 0; i < k; ++i) {
                VertexSet pre(n);
                for (Vertex v = 0; v < f.size(); ++v)
                    if (coordinate(f[v], i, k)) pre.insert(v);
                all = all && is_slicing(pre, n).has_value();
            }
            threshold_ok += all;
        }
        o.expect(threshold_ok == 100, "100 inference functions with threshold coordinates");

        int agree = 0;
        std::uniform_int_distribution<int> entry(-3, 3), shape(1, 9);
        for (int trial = 0; trial < 100; ++trial) {
            RationalMatrix m(shape(rng), shape(rng));
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
            if (m.rows() > 2)
                for (std::size_t c = 0; c < m.cols(); ++c) m(0, c) = m(1, c) + m(2, c);
            agree += rank(m) == rank_bareiss(m);
        }
        o.expect(agree == 100, "Gaussian and Bareiss ranks agree on 100 matrices");
        o.detail << " round trips " << round_trips << "/200, threshold " << threshold_ok << "/100, ranks " << agree
                 << "/100";
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
