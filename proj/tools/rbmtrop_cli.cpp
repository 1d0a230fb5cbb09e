/**
 * rbmtrop: command-line front end.
 *
 * Exit codes: 0 success, 2 invalid input or usage, 1 internal failure.
 * Randomized commands take --seed (default 0); the same flags always give
 * byte-identical output, for any --threads value.
 */
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"

using namespace rbmtrop;
using rbmtrop::cli::Json;

namespace {

struct Globals
{
    bool json = false;
    unsigned threads = default_thread_count();
    std::uint64_t seed = 0;
    bool allow_long = false;
};

Globals g;
std::ostringstream out;

void emit(const Json& j) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<std::size_t>& xs)
{
    std::string s;
    for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::vector<int> parse_split(const std::string& text)
{
    std::vector<int> a;
    std::stringstream s(text);
    for (std::string item; std::getline(s, item, ',');) {
        try {
            a.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad split '" + text + "': expected comma-separated coordinates");
        }
    }
    return a;
}

void require_long(bool condition, const std::string& what)
{
    if (condition && !g.allow_long) throw std::invalid_argument(what + " is a long computation; pass --allow-long");
}

// ---------------------------------------------------------------- slicings

void add_slicings(CLI::App& app)
{
    auto* cmd = app.add_subcommand("slicings", "Enumerate slicings (linear threshold functions) of the n-cube");
    static int n = 0;
    static bool count_only = false;
    static std::string strategy = "arrangement";
    cmd->add_option("--n", n, "cube dimension (1..5)")->required();
    cmd->add_flag("--count", count_only, "print only the number of slicings");
    cmd->add_option("--strategy", strategy, "arrangement | brute-force")
        ->check(CLI::IsMember({"arrangement", "brute-force"}));
    cmd->callback([] {
        if (n < 1 || n > 5) throw std::invalid_argument("slicings: n must be in 1..5");
        const auto strat = strategy == "brute-force" ? SlicingStrategy::brute_force : SlicingStrategy::arrangement;
        if (strat == SlicingStrategy::brute_force && n > 4)
            throw std::invalid_argument("slicings: brute-force strategy supports n <= 4");
        require_long(n >= 5, "slicings for n = 5");
        const auto all = enumerate_slicings(n, strat, g.threads);
        if (g.json) {
            Json j{{"n", n}, {"strategy", strategy}, {"count", all.size()}};
            if (!count_only) {
                Json list = Json::array();
                for (const auto& s : all) list.push_back(cli::to_json(s));
                j["slicings"] = list;
            }
            emit(j);
        } else if (count_only) {
            out << all.size() << "\n";
        } else {
            for (const auto& s : all) out << format_slicing(s) << "\n";
        }
    });
}

void add_zonotope(CLI::App& app)
{
    auto* cmd = app.add_subcommand("zonotope-facets", "Count facets of the zonotope generated by the cube vertices");
    static int n = 0;
    cmd->add_option("--n", n, "cube dimension (1..5)")->required();
    cmd->callback([] {
        if (n < 1 || n > 5) throw std::invalid_argument("zonotope-facets: n must be in 1..5");
        require_long(n >= 5, "zonotope-facets for n = 5");
        const auto f = count_zonotope_facets(n);
        if (g.json) emit(Json{{"n", n}, {"facets", f}});
        else out << f << "\n";
    });
}

// ------------------------------------------------------------- phi / infer

struct ParamSource
{
    std::string path;
    int n = 0;
    int k = 1;
    int bound = 5;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--params", path, "JSON file {n, k, W, b, c}");
        cmd->add_option("--n", n, "random parameters: visible units");
        cmd->add_option("--k", k, "random parameters: hidden units");
        cmd->add_option("--bound", bound, "random parameters: integer entries in [-bound, bound]");
    }

    TropParams get() const
    {
        if (!path.empty()) return cli::trop_params_from_json(cli::parse_json_file(path));
        if (n == 0) throw std::invalid_argument("give --params FILE or --n/--k for seeded random parameters");
        check_dimension(n);
        if (k < 0 || k > 24 || bound < 0) throw std::invalid_argument("bad --k or --bound");
        std::mt19937_64 rng(g.seed);
        auto p = random_generic_trop_params(n, k, rng, bound);
        p.validate();
        return p;
    }
};

void add_phi(CLI::App& app)
{
    auto* cmd = app.add_subcommand("phi", "Evaluate the tropical morphism q(v) = max_h (h.Wv + b.v + c.h)");
    static ParamSource src;
    src.attach(cmd);
    cmd->callback([] {
        const auto p = src.get();
        if (p.n > 16) throw std::invalid_argument("phi: n must be <= 16 for output");
        const auto q = phi(p);
        if (g.json) emit(Json{{"params", cli::to_json(p)}, {"q", cli::to_json(q.coords())}});
        else out << format_point(q.coords());
    });
}

void add_infer(CLI::App& app)
{
    auto* cmd = app.add_subcommand("infer", "Most likely hidden state for every visible state");
    static ParamSource src;
    src.attach(cmd);
    cmd->callback([] {
        const auto p = src.get();
        std::vector<Vertex> f;
        try {
            f = inference_function(p);
        } catch (const AmbiguousInference& e) {
            throw std::invalid_argument(e.what());
        }
        if (g.json) {
            Json map = Json::array();
            for (Vertex v = 0; v < f.size(); ++v)
                map.push_back(Json{{"v", vertex_string(v, p.n)}, {"h", vertex_string(f[v], p.k)}});
            emit(Json{{"n", p.n}, {"k", p.k}, {"map", map}});
        } else {
            for (Vertex v = 0; v < f.size(); ++v) out << vertex_string(v, p.n) << " " << vertex_string(f[v], p.k) << "\n";
        }
    });
}

// -------------------------------------------------------------------- dim

void add_dim(CLI::App& app)
{
    auto* cmd = app.add_subcommand("dim", "Dimension of the tropical RBM model via slicing-matrix ranks");
    static int n = 0, k = 0, restarts = 3;
    static std::string strategy = "code";
    cmd->add_option("--n", n, "visible units")->required();
    cmd->add_option("--k", k, "hidden units")->required();
    cmd->add_option("--strategy", strategy, "exhaustive | greedy | code")
        ->check(CLI::IsMember({"exhaustive", "greedy", "code"}));
    cmd->add_option("--restarts", restarts, "greedy restarts");
    cmd->callback([] {
        DimensionOptions opt;
        opt.strategy = strategy == "exhaustive" ? DimensionStrategy::exhaustive
                       : strategy == "greedy"   ? DimensionStrategy::greedy_random
                                                : DimensionStrategy::code_based;
        opt.seed = g.seed;
        opt.restarts = restarts;
        opt.allow_long = g.allow_long;
        opt.threads = g.threads;
        const auto r = tropical_dimension(n, k, opt);
        if (g.json) emit(cli::to_json(r));
        else
            out << "n " << r.n << " k " << r.k << " strategy " << to_string(r.strategy) << " max_rank " << r.max_rank
                << " dim " << r.dim << " certified " << bool_word(r.certified) << "\n";
    });
}

// -------------------------------------------------------------- member-tm1

void add_member(CLI::App& app)
{
    auto* cmd = app.add_subcommand("member-tm1", "Decide membership of a tropical point in the k = 1 model");
    static std::string path;
    cmd->add_option("--point", path, "TropicalPoint file (2^n rationals, one per line)")->required();
    cmd->callback([] {
        const auto q = parse_tropical_point(cli::read_file(path));
        if (q.dimension() > 4) throw std::invalid_argument("member-tm1: n must be <= 4");
        const auto r = membership_tm1(q, g.threads);
        if (g.json) {
            Json j{{"n", q.dimension()}, {"member", r.member}};
            if (r.member) {
                j["slicing"] = cli::to_json(*r.slicing);
                j["b"] = cli::to_json(r.b);
                j["omega"] = cli::to_json(r.omega);
                j["c"] = to_string(r.c);
                j["mu"] = to_string(r.mu);
            }
            emit(j);
        } else {
            out << "member: " << bool_word(r.member) << "\n";
            if (r.member) {
                out << "slicing: " << format_slicing(*r.slicing) << "\n";
                out << "b:";
                for (const auto& x : r.b) out << " " << to_string(x);
                out << "\nomega:";
                for (const auto& x : r.omega) out << " " << to_string(x);
                out << "\nc: " << to_string(r.c) << "\nmu: " << to_string(r.mu) << "\n";
            }
        }
    });
}

// ------------------------------------------------------------------ codes

Json code_json(const BinaryCode& c)
{
    Json words = Json::array();
    for (auto w : c.words()) words.push_back(vertex_string(w, c.length()));
    Json j{{"n", c.length()}, {"size", c.size()}, {"words", words}};
    j["min_distance"] = c.size() >= 2 ? Json(min_distance(c)) : Json(nullptr);
    j["covering_radius"] = covering_radius(c);
    return j;
}

void print_code(const BinaryCode& c)
{
    if (g.json) {
        emit(code_json(c));
        return;
    }
    out << format_code(c);
    out << "# size " << c.size();
    if (c.size() >= 2) out << " min_distance " << min_distance(c);
    out << " covering_radius " << covering_radius(c) << "\n";
}

void add_codes(CLI::App& app)
{
    auto* cmd = app.add_subcommand("codes", "Binary codes and the bounds used for dimension certificates");
    cmd->require_subcommand(1);

    auto* ham = cmd->add_subcommand("hamming", "Hamming code of length 2^ell - 1");
    static int ell = 3;
    ham->add_option("--ell", ell, "2..4")->required();
    ham->callback([] { print_code(hamming_code(ell)); });

    auto* lex = cmd->add_subcommand("lexicode", "Greedy lexicographic code");
    static int ln = 0, ld = 3;
    lex->add_option("--n", ln, "length")->required();
    lex->add_option("--d", ld, "minimum distance");
    lex->callback([] {
        if (ln < 1 || ln > 16) throw std::invalid_argument("lexicode: n must be in 1..16");
        print_code(lexicode(ln, ld));
    });

    auto* an = cmd->add_subcommand("analyze", "Minimum distance and covering radius of a code file");
    static std::string path;
    an->add_option("--file", path, "code file: n=<len> then one binary word per line")->required();
    an->callback([] { print_code(parse_code(cli::read_file(path))); });

    auto* bounds = cmd->add_subcommand("bounds", "Closed-form and tabulated bounds on A_2(n,3) and K_2(n,1)");
    static int bn = 0;
    bounds->add_option("--n", bn, "length (omit for every tabulated length)");
    bounds->callback([] {
        std::vector<int> lengths;
        if (bn != 0) lengths.push_back(bn);
        else lengths = known_bounds_lengths();
        Json rows = Json::array();
        for (int n : lengths) {
            if (n < 1 || n > 4096) throw std::invalid_argument("bounds: n must be in 1..4096");
            Json row{{"n", n}, {"varshamov_lower", to_string(varshamov_lower(n))},
                     {"covering_upper", to_string(covering_upper(n))}};
            const auto t = table_known_bounds(n);
            row["table_k_le"] = t ? Json(to_string(t->k_le)) : Json(nullptr);
            row["table_k_ge"] = t && t->k_ge ? Json(to_string(*t->k_ge)) : Json(nullptr);
            row["k_le_improved"] = t ? Json(t->k_le_improved) : Json(nullptr);
            row["k_ge_improved"] = t ? Json(t->k_ge_improved) : Json(nullptr);
            rows.push_back(row);
            if (!g.json) {
                out << "n " << n << " varshamov_lower " << varshamov_lower(n) << " covering_upper "
                    << covering_upper(n);
                if (t) {
                    out << " table_k_le " << t->k_le << (t->k_le_improved ? "*" : "");
                    if (t->k_ge) out << " table_k_ge " << *t->k_ge << (t->k_ge_improved ? "*" : "");
                }
                out << "\n";
            }
        }
        if (g.json) emit(Json{{"rows", rows}});
    });

    auto* exact = cmd->add_subcommand("exact", "Exhaustive A_2(n,3) for n <= 5 and K_2(n,1) for n <= 4");
    exact->callback([] {
        Json rows = Json::array();
        for (const auto& v : exact_small_values()) {
            rows.push_back(Json{{"n", v.n}, {"A2", v.a2 ? Json(*v.a2) : Json(nullptr)},
                                {"K2", v.k2 ? Json(*v.k2) : Json(nullptr)}});
            if (!g.json) {
                out << "n " << v.n << " A2 " << (v.a2 ? std::to_string(*v.a2) : "-") << " K2 "
                    << (v.k2 ? std::to_string(*v.k2) : "-") << "\n";
            }
        }
        if (g.json) emit(Json{{"rows", rows}});
    });
}

// -------------------------------------------------------------------- rbm

Distribution read_distribution(const std::string& path) { return parse_distribution(cli::read_file(path)); }

void print_distribution(const Distribution& p, Json extra = Json::object())
{
    if (g.json) {
        Json j{{"n", p.dimension()}, {"p", cli::to_json(p.probabilities())}};
        j.update(extra);
        emit(j);
    } else {
        out << format_distribution(p);
    }
}

void add_rbm(CLI::App& app)
{
    auto* cmd = app.add_subcommand("rbm", "Exact probability-side computations for binary RBMs");
    cmd->require_subcommand(1);

    auto* joint = cmd->add_subcommand("joint", "Marginal distribution of the visible units");
    static std::string jpath;
    static int jn = 0, jk = 1;
    joint->add_option("--params", jpath, "JSON file {n, k, beta, gamma, omega} (exponentiated parameters)");
    joint->add_option("--n", jn, "random parameters: visible units");
    joint->add_option("--k", jk, "random parameters: hidden units");
    joint->callback([] {
        ExpParams e;
        if (!jpath.empty()) {
            e = cli::exp_params_from_json(cli::parse_json_file(jpath));
        } else {
            if (jn == 0) throw std::invalid_argument("give --params FILE or --n/--k");
            check_dimension(jn);
            if (jk < 0 || jk > 16) throw std::invalid_argument("k must be in 0..16");
            std::mt19937_64 rng(g.seed);
            e = random_exp_params(jn, jk, rng);
        }
        if (e.n > 12 || e.k > 12) throw std::invalid_argument("joint: n and k must be <= 12");
        print_distribution(joint_distribution(e), Json{{"params", cli::to_json(e)}});
    });

    auto* mix = cmd->add_subcommand("mixture", "Mixture of two product distributions and its RBM form");
    static std::string mpath;
    static int mn = 0;
    mix->add_option("--params", mpath, "JSON file {lambda, delta, epsilon}");
    mix->add_option("--n", mn, "random parameters: visible units");
    mix->callback([] {
        MixtureParams m;
        if (!mpath.empty()) {
            m = cli::mixture_params_from_json(cli::parse_json_file(mpath));
        } else {
            if (mn == 0) throw std::invalid_argument("give --params FILE or --n");
            check_dimension(mn);
            std::mt19937_64 rng(g.seed);
            m = random_mixture_params(mn, rng);
        }
        if (m.dimension() > 12) throw std::invalid_argument("mixture: n must be <= 12");
        const auto p = mixture_distribution(m);
        const auto e = reparameterize(m);
        const bool agree = joint_distribution(e) == p;
        if (!agree) throw std::logic_error("mixture and reparameterized RBM disagree");
        print_distribution(p, Json{{"rbm_params", cli::to_json(e)}, {"rbm_agrees", agree}});
        if (!g.json) out << "# rbm_agrees true\n";
    });

    auto* had = cmd->add_subcommand("hadamard", "Normalized entrywise product of distributions");
    static std::vector<std::string> hpaths;
    had->add_option("--dist", hpaths, "distribution files (two or more)")->required();
    had->callback([] {
        if (hpaths.size() < 2) throw std::invalid_argument("hadamard: need at least two --dist files");
        auto p = read_distribution(hpaths[0]);
        for (std::size_t i = 1; i < hpaths.size(); ++i) p = hadamard_product(p, read_distribution(hpaths[i]));
        print_distribution(p);
    });

    auto* fr = cmd->add_subcommand("flatten-rank", "Ranks of flattenings");
    static std::string fpath, fsplit;
    fr->add_option("--dist", fpath, "distribution file")->required();
    fr->add_option("--split", fsplit, "row coordinates, e.g. 1,2 (default: every split)");
    fr->callback([] {
        const auto p = read_distribution(fpath);
        std::vector<std::vector<int>> splits;
        if (!fsplit.empty()) splits.push_back(checked_split(parse_split(fsplit), p.dimension()));
        else splits = nontrivial_splits(p.dimension());
        if (p.dimension() > 8) throw std::invalid_argument("flatten-rank: n must be <= 8");
        Json rows = Json::array();
        std::size_t max_rank = 0;
        for (const auto& a : splits) {
            const auto r = rank(flattening(p, a));
            max_rank = std::max(max_rank, r);
            rows.push_back(Json{{"split", a}, {"rank", r}});
            if (!g.json) {
                std::string s;
                for (int x : a) s += (s.empty() ? "" : ",") + std::to_string(x);
                out << "split " << s << " rank " << r << "\n";
            }
        }
        if (g.json) emit(Json{{"n", p.dimension()}, {"splits", rows}, {"max_rank", max_rank}});
    });

    auto* cov = cmd->add_subcommand("covariance", "Exact covariance matrix of the visible units");
    static std::string cpath;
    cov->add_option("--dist", cpath, "distribution file")->required();
    cov->callback([] {
        const auto p = read_distribution(cpath);
        const auto s = covariance_matrix(p);
        if (g.json) {
            emit(Json{{"n", p.dimension()}, {"sigma", cli::to_json(s)}});
        } else {
            for (std::size_t r = 0; r < s.rows(); ++r) {
                for (std::size_t c = 0; c < s.cols(); ++c) out << (c ? " " : "") << to_string(s(r, c));
                out << "\n";
            }
        }
    });

    auto* chk = cmd->add_subcommand("check", "Necessary conditions for the one-hidden-node model");
    static std::string kpath;
    chk->add_option("--dist", kpath, "distribution file")->required();
    chk->callback([] {
        const auto p = read_distribution(kpath);
        if (p.dimension() > 8) throw std::invalid_argument("check: n must be <= 8");
        const auto r = check_membership_necessary(p);
        if (g.json) {
            emit(Json{{"n", p.dimension()},
                      {"pass", r.pass()},
                      {"scope", NecessaryConditionReport::scope},
                      {"max_flattening_rank", r.max_flattening_rank},
                      {"flattening_rank_ok", r.flattening_rank_ok},
                      {"triple_sign_ok", r.triple_sign_ok},
                      {"covariance_binomial_ok", r.covariance_binomial_ok}});
        } else {
            out << "pass: " << bool_word(r.pass()) << " (" << NecessaryConditionReport::scope << ")\n"
                << "max_flattening_rank: " << r.max_flattening_rank << "\n"
                << "flattening_rank_ok: " << bool_word(r.flattening_rank_ok) << "\n"
                << "triple_sign_ok: " << bool_word(r.triple_sign_ok) << "\n"
                << "covariance_binomial_ok: " << bool_word(r.covariance_binomial_ok) << "\n";
        }
    });
}

// ---------------------------------------------------------------- tropvar

void add_tropvar(CLI::App& app)
{
    auto* cmd = app.add_subcommand("tropvar", "Flattening minors, initial forms and the n = 4 quartic witness");
    cmd->require_subcommand(1);

    auto* minors = cmd->add_subcommand("minors", "3x3 minors of flattenings");
    static int mn = 4;
    static std::string msplit;
    minors->add_option("--n", mn, "cube dimension (2..6)")->required();
    minors->add_option("--split", msplit, "row coordinates, e.g. 1,2 (default: every split)");
    minors->callback([] {
        if (mn < 2 || mn > 6) throw std::invalid_argument("minors: n must be in 2..6");
        const auto list = msplit.empty() ? all_flattening_minors(mn) : flattening_minors(mn, parse_split(msplit));
        if (g.json) {
            Json a = Json::array();
            for (const auto& f : list) a.push_back(format_polynomial(f));
            emit(Json{{"n", mn}, {"count", list.size()}, {"minors", a}});
        } else {
            for (const auto& f : list) out << format_polynomial(f) << "\n";
        }
    });

    auto* inf = cmd->add_subcommand("initial-form", "Max-plus initial form of a polynomial");
    static std::string ppath, wpath;
    inf->add_option("--poly", ppath, "polynomial file")->required();
    inf->add_option("--weight", wpath, "weight file (2^n rationals)")->required();
    inf->callback([] {
        const auto f = parse_polynomial(cli::read_file(ppath));
        const auto [n, w] = parse_point_values(cli::read_file(wpath));
        if (n != f.dimension()) throw std::invalid_argument("initial-form: weight length does not match polynomial");
        const auto in = initial_form(f, w);
        if (g.json) {
            emit(Json{{"n", n}, {"initial_form", format_polynomial(in)}, {"terms", in.size()},
                      {"weight", to_string(initial_weight(f, w))}, {"monomial", in.size() == 1}});
        } else {
            out << format_polynomial(in);
        }
    });

    auto* wit = cmd->add_subcommand("witness-2222", "Prevariety point cut off by a quartic of the ideal");
    wit->callback([] {
        const auto r = quartic_witness_check();
        const auto q = witness_2222_weight();
        if (g.json) {
            emit(Json{{"weight", cli::to_json(q)},
                      {"prevariety", r.prevariety},
                      {"minors_checked", r.minors_checked},
                      {"quartic", format_polynomial(witness_2222_quartic())},
                      {"quartic_initial_form", format_polynomial(r.quartic_initial_form)},
                      {"quartic_initial_weight", to_string(r.quartic_initial_weight)},
                      {"quartic_monomial", r.quartic_monomial()}});
        } else {
            out << "prevariety: " << bool_word(r.prevariety) << "\n"
                << "minors_checked: " << r.minors_checked << "\n"
                << "quartic_monomial: " << bool_word(r.quartic_monomial()) << "\n"
                << "initial_form: " << format_polynomial(r.quartic_initial_form)
                << "initial_weight: " << to_string(r.quartic_initial_weight) << "\n";
        }
    });
}

// -------------------------------------------------------------------- fan

std::string fvector_line(const std::vector<std::size_t>& f) { return join(f); }

void add_fan(CLI::App& app)
{
    auto* cmd = app.add_subcommand("fan", "Secondary fan of the 3-cube and the k = 1 subcomplex");
    cmd->require_subcommand(1);

    auto* tri = cmd->add_subcommand("triangulations", "All triangulations of the 3-cube");
    static bool tcount = false;
    tri->add_flag("--count", tcount, "print only the number of triangulations");
    tri->callback([] {
        const auto all = enumerate_triangulations_3cube();
        if (g.json) {
            Json a = Json::array();
            for (const auto& t : all) {
                Json cells = Json::array();
                for (auto c : t.cells) cells.push_back(format_cell(c));
                a.push_back(Json{{"cells", cells}, {"regular", regularity_witness(t).has_value()}});
            }
            Json j{{"count", all.size()}};
            if (!tcount) j["triangulations"] = a;
            emit(j);
        } else if (tcount) {
            out << all.size() << "\n";
        } else {
            for (std::size_t i = 0; i < all.size(); ++i) out << (i ? "\n" : "") << format_triangulation(all[i]);
        }
    });

    auto* sph = cmd->add_subcommand("sphere-fvector", "Face numbers of the secondary fan modulo lineality");
    sph->callback([] {
        const auto fan = build_secondary_fan(g.threads);
        const auto f = fan.fvector();
        const std::vector<std::size_t> fv(f.begin(), f.end());
        if (g.json) emit(Json{{"fvector", fv}, {"lineality_dimension", fan.lineality_dimension}});
        else out << fvector_line(fv) << "\n";
    });

    auto* tm = cmd->add_subcommand("tm13", "Subcomplex of the secondary sphere lying in the k = 1 model");
    static bool fonly = false;
    tm->add_flag("--fvector", fonly, "print only the f-vector");
    tm->callback([] {
        const auto fan = build_secondary_fan(g.threads);
        const auto c = tm13_subcomplex(fan, g.threads);
        const auto f = c.complex.fvector();
        if (g.json) {
            Json vertices = Json::array();
            for (std::size_t i = 0; i < c.complex.vertex_labels.size(); ++i)
                vertices.push_back(Json{{"label", c.complex.vertex_labels[i]},
                                        {"class", c.vertex_types[i] == CutType::corner ? "V" : "D"},
                                        {"lift", cli::to_json(c.vertex_lifts[i])}});
            Json j{{"fvector", f}};
            if (!fonly) {
                j["vertices"] = vertices;
                j["faces_by_dim"] = c.complex.faces_by_dim;
            }
            emit(j);
        } else if (fonly) {
            out << fvector_line(f) << "\n";
        } else {
            out << "fvector " << fvector_line(f) << "\n";
            for (std::size_t d = 0; d < c.complex.faces_by_dim.size(); ++d)
                for (const auto& face : c.complex.faces_by_dim[d]) {
                    out << d;
                    for (int v : face) out << " " << c.complex.vertex_labels[v];
                    out << "\n";
                }
        }
    });

    auto* hom = cmd->add_subcommand("homology", "Reduced rational homology of the k = 1 subcomplex");
    hom->callback([] {
        const auto fan = build_secondary_fan(g.threads);
        const auto c = tm13_subcomplex(fan, g.threads);
        const auto h = reduced_homology_ranks(c.complex);
        if (g.json) emit(Json{{"reduced_homology", h}});
        else out << join(h) << "\n";
    });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact tropical and algebraic geometry of restricted Boltzmann machines", "rbmtrop"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.json, "emit JSON");
    app.add_option("--threads", g.threads, "worker threads (default: RBMTROP_THREADS or 1)")
        ->check(CLI::Range(1u, 256u));
    app.add_option("--seed", g.seed, "seed for randomized commands (default 0)");
    app.add_flag("--allow-long", g.allow_long, "permit long-running computations");

    add_slicings(app);
    add_zonotope(app);
    add_phi(app);
    add_infer(app);
    add_dim(app);
    add_member(app);
    add_codes(app);
    add_rbm(app);
    add_tropvar(app);
    add_fan(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    std::cout << out.str();
    return 0;
}
