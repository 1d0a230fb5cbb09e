/**
 * JSON readers and writers for the command-line tool.  Rationals are always
 * written as "p/q" strings; on input, strings and integer literals are both
 * accepted.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>
#include <rbmtrop/rbmtrop.hpp>

namespace rbmtrop::cli {

using Json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Json parse_json_file(const std::string& path)
{
    try {
        return Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

inline Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

inline RationalVector vector_from_json(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    RationalVector out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

inline RationalMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols)
{
    if (!j.is_array() || j.size() != rows) throw std::invalid_argument("matrix has the wrong number of rows");
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto row = vector_from_json(j[r]);
        if (row.size() != cols) throw std::invalid_argument("matrix row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline int int_field(const Json& j, const char* key)
{
    const auto& v = field(j, key);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

/// {"n", "k", "W": k rows of n, "b": n, "c": k}
inline TropParams trop_params_from_json(const Json& j)
{
    TropParams p;
    p.n = int_field(j, "n");
    p.k = int_field(j, "k");
    check_dimension(p.n);
    if (p.k < 0) throw std::invalid_argument("k must be >= 0");
    p.W = matrix_from_json(field(j, "W"), static_cast<std::size_t>(p.k), static_cast<std::size_t>(p.n));
    p.b = vector_from_json(field(j, "b"));
    p.c = vector_from_json(field(j, "c"));
    p.validate();
    return p;
}

/// {"n", "k", "beta": n, "gamma": k, "omega": k rows of n}
inline ExpParams exp_params_from_json(const Json& j)
{
    ExpParams e;
    e.n = int_field(j, "n");
    e.k = int_field(j, "k");
    check_dimension(e.n);
    if (e.k < 0) throw std::invalid_argument("k must be >= 0");
    e.beta = vector_from_json(field(j, "beta"));
    e.gamma = vector_from_json(field(j, "gamma"));
    e.omega = matrix_from_json(field(j, "omega"), static_cast<std::size_t>(e.k), static_cast<std::size_t>(e.n));
    e.validate();
    return e;
}

/// {"lambda", "delta": n, "epsilon": n}
inline MixtureParams mixture_params_from_json(const Json& j)
{
    MixtureParams m;
    m.lambda = rational_from_json(field(j, "lambda"));
    m.delta = vector_from_json(field(j, "delta"));
    m.epsilon = vector_from_json(field(j, "epsilon"));
    m.validate();
    return m;
}

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const RationalVector& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline Json to_json(const RationalMatrix& m)
{
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
    return a;
}

inline Json to_json(const TropParams& p)
{
    return Json{{"n", p.n}, {"k", p.k}, {"W", to_json(p.W)}, {"b", to_json(p.b)}, {"c", to_json(p.c)}};
}

inline Json to_json(const ExpParams& e)
{
    return Json{{"n", e.n}, {"k", e.k}, {"beta", to_json(e.beta)}, {"gamma", to_json(e.gamma)},
                {"omega", to_json(e.omega)}};
}

inline Json to_json(const Slicing& s)
{
    return Json{{"n", s.n}, {"positive", s.positive.hex()}, {"offset", to_string(s.witness.offset)},
                {"omega", to_json(s.witness.omega)}};
}

inline Json to_json(const DimensionRecord& r)
{
    Json ids = Json::array();
    for (const auto& s : r.witness) ids.push_back(s.positive.hex());
    return Json{{"n", r.n},
                {"k", r.k},
                {"strategy", to_string(r.strategy)},
                {"max_rank", r.max_rank},
                {"dim", r.dim},
                {"certified", r.certified},
                {"witness", ids}};
}

}  // namespace rbmtrop::cli
