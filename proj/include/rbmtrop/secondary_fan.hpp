/**
 * Triangulations and regular subdivisions of the 3-cube, its secondary fan
 * (as a polyhedral 3-sphere after removing the 4-dimensional lineality space
 * of affine lifts), the subcomplex cut out by the one-hidden-node tropical
 * model, and rational simplicial homology.
 *
 * Subsets of the 8 cube vertices are bitmasks (bit v = vertex v).  Regular
 * subdivisions are read off the LOWER hull of the lifted points (v, w_v):
 * their cells are the domains of linearity of the largest convex function
 * below the heights, which is how q(v) = b.v + max(0, omega.v + c) folds.
 */
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "simplex.hpp"
#include "trop_rbm.hpp"

namespace rbmtrop {

using CellMask = unsigned;

constexpr int fan_cube_dim = 3;
constexpr unsigned fan_point_count = 8;

inline std::vector<Vertex> cell_vertices(CellMask m)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < fan_point_count; ++v)
        if ((m >> v) & 1u) out.push_back(v);
    return out;
}

inline std::string format_cell(CellMask m)
{
    std::string out;
    for (auto v : cell_vertices(m)) {
        if (!out.empty()) out += " ";
        out += vertex_string(v, fan_cube_dim);
    }
    return out;
}

/// 6 * volume of the tetrahedron on the 4 vertices of `tet`.
inline long tetra_volume6(CellMask tet)
{
    const auto vs = cell_vertices(tet);
    if (vs.size() != 4) throw std::invalid_argument("tetra_volume6: need 4 vertices");
    long m[3][3];
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 3; ++j)
            m[r][j] = coordinate(vs[r + 1], j, fan_cube_dim) - coordinate(vs[0], j, fan_cube_dim);
    const long det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det < 0 ? -det : det;
}

struct Circuit
{
    CellMask positive;
    CellMask negative;
};

/// Signed circuits (minimal affine dependences) of the cube vertices, both orientations.
inline const std::vector<Circuit>& cube_circuits()
{
    static const std::vector<Circuit> circuits = [] {
        std::vector<Circuit> out;
        for (CellMask s = 1; s < (1u << fan_point_count); ++s) {
            const int size = std::popcount(s);
            if (size < 3 || size > 5) continue;
            const auto vs = cell_vertices(s);
            RationalMatrix m(4, vs.size());
            for (std::size_t c = 0; c < vs.size(); ++c) {
                const auto h = homogenized_vertex(vs[c], fan_cube_dim);
                for (std::size_t r = 0; r < 4; ++r) m(r, c) = h[r];
            }
            const auto kernel = nullspace(m);
            if (kernel.size() != 1) continue;
            CellMask pos = 0, neg = 0;
            bool full_support = true;
            for (std::size_t c = 0; c < vs.size(); ++c) {
                const int sg = kernel[0][c].sign();
                if (sg == 0) full_support = false;
                else if (sg > 0) pos |= 1u << vs[c];
                else neg |= 1u << vs[c];
            }
            if (!full_support) continue;
            out.push_back({pos, neg});
            out.push_back({neg, pos});
        }
        return out;
    }();
    return circuits;
}

/// Two simplices meet in a common face iff no circuit has Z+ in one and Z- in the other.
inline bool intersect_properly(CellMask a, CellMask b)
{
    for (const auto& c : cube_circuits())
        if ((c.positive & ~a) == 0 && (c.negative & ~b) == 0) return false;
    return true;
}

struct Triangulation
{
    std::vector<CellMask> cells;  ///< sorted tetrahedra

    long total_volume6() const
    {
        long v = 0;
        for (auto c : cells) v += tetra_volume6(c);
        return v;
    }

    bool operator==(const Triangulation&) const = default;
    bool operator<(const Triangulation& o) const { return cells < o.cells; }
};

/// Interior triangles with their two tetrahedra.
inline std::vector<std::array<CellMask, 3>> interior_facets(const Triangulation& t)
{
    std::vector<std::array<CellMask, 3>> out;
    for (std::size_t i = 0; i < t.cells.size(); ++i)
        for (std::size_t j = i + 1; j < t.cells.size(); ++j) {
            const CellMask shared = t.cells[i] & t.cells[j];
            if (std::popcount(shared) == 3) out.push_back({shared, t.cells[i], t.cells[j]});
        }
    return out;
}

/**
 * Row a in Q^8 with a.w > 0 iff the lift w bends upward (convexly) across the
 * triangle shared by tetrahedra sigma = F + {s} and tau = F + {t}:  w_t minus
 * the affine interpolation of w on sigma evaluated at t.
 */
inline RationalVector folding_row(CellMask sigma, CellMask tau)
{
    const CellMask apex = tau & ~sigma;
    const Vertex t = static_cast<Vertex>(std::countr_zero(apex));
    const auto vs = cell_vertices(sigma);
    // affine coordinates alpha of t w.r.t. sigma: sum alpha_p (1, p) = (1, t)
    RationalMatrix m(4, 5);
    for (std::size_t c = 0; c < 4; ++c) {
        const auto h = homogenized_vertex(vs[c], fan_cube_dim);
        for (std::size_t r = 0; r < 4; ++r) m(r, c) = h[r];
    }
    const auto ht = homogenized_vertex(t, fan_cube_dim);
    for (std::size_t r = 0; r < 4; ++r) m(r, 4) = ht[r];
    reduce_to_rref(m);
    RationalVector row(fan_point_count);
    row[t] = 1;
    for (std::size_t c = 0; c < 4; ++c) row[vs[c]] -= m(c, 4);
    return row;
}

/// Inequalities (a.w >= 0) of the secondary cone of a triangulation.
inline std::vector<RationalVector> secondary_cone_rows(const Triangulation& t)
{
    std::vector<RationalVector> rows;
    for (const auto& f : interior_facets(t)) rows.push_back(folding_row(f[1], f[2]));
    return rows;
}

/// Strictly convex lift inducing t, if t is regular.
inline std::optional<RationalVector> regularity_witness(const Triangulation& t)
{
    LinearSystem sys;
    sys.strict_rows = secondary_cone_rows(t);
    if (sys.strict_rows.empty()) return RationalVector(fan_point_count);
    return solve_feasibility(sys);
}

struct RegularSubdivision
{
    std::vector<CellMask> cells;  ///< maximal cells, sorted
    RationalVector lift;

    bool is_triangulation() const
    {
        return std::all_of(cells.begin(), cells.end(), [](CellMask c) { return std::popcount(c) == 4; });
    }
};

/// Lower-hull subdivision of the 3-cube induced by heights w.
inline RegularSubdivision regular_subdivision_from_lift(const RationalVector& w)
{
    if (w.size() != fan_point_count) throw std::invalid_argument("regular_subdivision_from_lift: need 8 heights");
    std::set<CellMask> cells;
    for (CellMask s = 0; s < (1u << fan_point_count); ++s) {
        if (std::popcount(s) != 4 || tetra_volume6(s) == 0) continue;
        const auto vs = cell_vertices(s);
        // affine g(p) = g0 + g.p through the 4 lifted points
        RationalMatrix m(4, 5);
        for (std::size_t r = 0; r < 4; ++r) {
            const auto h = homogenized_vertex(vs[r], fan_cube_dim);
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = h[c];
            m(r, 4) = w[vs[r]];
        }
        reduce_to_rref(m);
        CellMask cell = 0;
        bool lower = true;
        for (Vertex v = 0; v < fan_point_count && lower; ++v) {
            const auto h = homogenized_vertex(v, fan_cube_dim);
            Rational g = 0;
            for (std::size_t c = 0; c < 4; ++c) g += m(c, 4) * h[c];
            const int sg = Rational(w[v] - g).sign();
            if (sg < 0) lower = false;
            else if (sg == 0) cell |= 1u << v;
        }
        if (lower) cells.insert(cell);
    }
    return {std::vector<CellMask>(cells.begin(), cells.end()), w};
}

/// All triangulations of the 3-cube by backtracking over non-degenerate tetrahedra.
inline std::vector<Triangulation> enumerate_triangulations_3cube()
{
    std::vector<CellMask> tets;
    for (CellMask s = 0; s < (1u << fan_point_count); ++s)
        if (std::popcount(s) == 4 && tetra_volume6(s) > 0) tets.push_back(s);
    const long cube_volume6 = 6;

    std::vector<std::vector<char>> compatible(tets.size(), std::vector<char>(tets.size(), 0));
    for (std::size_t i = 0; i < tets.size(); ++i)
        for (std::size_t j = 0; j < tets.size(); ++j)
            compatible[i][j] = i != j && intersect_properly(tets[i], tets[j]) && intersect_properly(tets[j], tets[i]);

    std::vector<Triangulation> out;
    std::vector<std::size_t> chosen;
    auto search = [&](auto&& self, std::size_t from, long volume) -> void {
        if (volume == cube_volume6) {
            Triangulation t;
            for (auto i : chosen) t.cells.push_back(tets[i]);
            std::sort(t.cells.begin(), t.cells.end());
            out.push_back(std::move(t));
            return;
        }
        for (std::size_t i = from; i < tets.size(); ++i) {
            const long v = tetra_volume6(tets[i]);
            if (volume + v > cube_volume6) continue;
            if (!std::all_of(chosen.begin(), chosen.end(), [&](std::size_t j) { return compatible[i][j]; })) continue;
            chosen.push_back(i);
            self(self, i + 1, volume + v);
            chosen.pop_back();
        }
    };
    search(search, 0, 0);
    std::sort(out.begin(), out.end());
    for (const auto& t : out)
        if (t.total_volume6() != cube_volume6) throw std::logic_error("triangulation volume mismatch");
    return out;
}

/// Vertices where lifts are pinned to zero to quotient out affine functions.
inline const std::array<Vertex, 4>& lineality_basis_vertices()
{
    static const std::array<Vertex, 4> pinned = {0b000, 0b001, 0b010, 0b100};
    return pinned;
}

inline const std::array<Vertex, 4>& quotient_vertices()
{
    static const std::array<Vertex, 4> free = {0b011, 0b101, 0b110, 0b111};
    return free;
}

/// Representative of w modulo affine functions with w = 0 on the pinned vertices.
inline RationalVector reduce_modulo_affine(const RationalVector& w)
{
    // affine g with g(000) = w_000 and g(e_j) = w_{e_j}
    RationalVector out(fan_point_count);
    for (Vertex v = 0; v < fan_point_count; ++v) {
        Rational g = w[0];
        for (int j = 0; j < fan_cube_dim; ++j)
            if (coordinate(v, j, fan_cube_dim)) g += w[Vertex{1} << (fan_cube_dim - 1 - j)] - w[0];
        out[v] = w[v] - g;
    }
    return out;
}

struct FanFace
{
    std::vector<int> rays;  ///< sorted global ray ids
    int dim = 0;            ///< dimension modulo lineality (1..4)
};

struct SecondaryFan
{
    std::vector<Triangulation> triangulations;
    std::vector<RationalVector> rays;            ///< primitive lifts, zero on the pinned vertices
    std::vector<FanFace> faces;                  ///< all faces of dims 1..4, sorted by (dim, rays)
    std::vector<int> maximal_face_of;            ///< triangulation index -> face index
    std::size_t lineality_dimension = 0;

    std::array<std::size_t, 4> fvector() const
    {
        std::array<std::size_t, 4> f{};
        for (const auto& face : faces) ++f[face.dim - 1];
        return f;
    }

    /// Sum of the face's rays: a relative-interior lift.
    RationalVector interior_point(const FanFace& f) const
    {
        RationalVector p(fan_point_count);
        for (int r : f.rays)
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += rays[r][i];
        return p;
    }
};

/**
 * Builds the secondary fan of the 3-cube from the secondary cones of all
 * triangulations and collects every face (dimension >= 1 modulo lineality),
 * identified by its set of extreme rays.
 */
inline SecondaryFan build_secondary_fan(unsigned threads = 1)
{
    SecondaryFan fan;
    fan.triangulations = enumerate_triangulations_3cube();

    // Lineality: common kernel of every folding row.
    {
        std::vector<Rational> entries;
        std::size_t rows = 0;
        for (const auto& t : fan.triangulations)
            for (const auto& r : secondary_cone_rows(t)) {
                entries.insert(entries.end(), r.begin(), r.end());
                ++rows;
            }
        fan.lineality_dimension = nullspace(RationalMatrix(rows, fan_point_count, entries)).size();
    }

    const auto& free = quotient_vertices();
    struct ConeData
    {
        std::vector<RationalVector> rows4;
        std::vector<RationalVector> rays4;
    };
    auto cones = parallel_map(fan.triangulations.size(), threads, [&](std::size_t ti) {
        ConeData cd;
        for (const auto& r : secondary_cone_rows(fan.triangulations[ti])) {
            RationalVector r4(4);
            for (std::size_t i = 0; i < 4; ++i) r4[i] = r[free[i]];
            cd.rows4.push_back(std::move(r4));
        }
        std::set<RationalVector> found;
        const std::size_t m = cd.rows4.size();
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t c = b + 1; c < m; ++c) {
                    RationalMatrix sub(3, 4);
                    for (std::size_t j = 0; j < 4; ++j) {
                        sub(0, j) = cd.rows4[a][j];
                        sub(1, j) = cd.rows4[b][j];
                        sub(2, j) = cd.rows4[c][j];
                    }
                    const auto kernel = nullspace(sub);
                    if (kernel.size() != 1) continue;
                    for (int sgn : {1, -1}) {
                        RationalVector ray = kernel[0];
                        if (sgn < 0)
                            for (auto& x : ray) x = -x;
                        if (std::all_of(cd.rows4.begin(), cd.rows4.end(),
                                        [&](const RationalVector& row) { return dot(row, ray).sign() >= 0; }))
                            found.insert(primitive_integer_vector(ray));
                    }
                }
        cd.rays4.assign(found.begin(), found.end());
        return cd;
    });

    std::map<RationalVector, int> ray_id;
    std::vector<RationalVector> rays4;
    for (const auto& cd : cones)
        for (const auto& r : cd.rays4)
            if (ray_id.emplace(r, 0).second) rays4.push_back(r);
    std::sort(rays4.begin(), rays4.end());
    for (std::size_t i = 0; i < rays4.size(); ++i) {
        ray_id[rays4[i]] = static_cast<int>(i);
        RationalVector lift(fan_point_count);
        for (std::size_t j = 0; j < 4; ++j) lift[free[j]] = rays4[i][j];
        fan.rays.push_back(std::move(lift));
    }

    std::map<std::vector<int>, int> face_dim;
    std::vector<std::vector<int>> maximal(fan.triangulations.size());
    for (std::size_t ti = 0; ti < cones.size(); ++ti) {
        const auto& cd = cones[ti];
        const std::size_t m = cd.rows4.size();
        for (unsigned tight = 0; tight < (1u << m); ++tight) {
            std::vector<int> face;
            std::vector<Rational> entries;
            for (const auto& r : cd.rays4) {
                bool on = true;
                for (std::size_t i = 0; i < m && on; ++i)
                    if (((tight >> i) & 1u) && dot(cd.rows4[i], r).sign() != 0) on = false;
                if (!on) continue;
                face.push_back(ray_id.at(r));
                entries.insert(entries.end(), r.begin(), r.end());
            }
            if (face.empty()) continue;
            std::sort(face.begin(), face.end());
            const int d = static_cast<int>(rank(RationalMatrix(face.size(), 4, entries)));
            face_dim.emplace(face, d);
            if (tight == 0) maximal[ti] = face;
        }
    }
    for (const auto& [rays, d] : face_dim) fan.faces.push_back({rays, d});
    std::stable_sort(fan.faces.begin(), fan.faces.end(),
                     [](const FanFace& a, const FanFace& b) { return a.dim < b.dim; });
    for (const auto& mf : maximal) {
        const auto it = std::find_if(fan.faces.begin(), fan.faces.end(), [&](const FanFace& f) { return f.rays == mf; });
        fan.maximal_face_of.push_back(static_cast<int>(it - fan.faces.begin()));
    }
    return fan;
}

inline std::array<std::size_t, 4> secondary_sphere_fvector(unsigned threads = 1)
{
    return build_secondary_fan(threads).fvector();
}

/// Abstract simplicial complex over labelled vertices; faces_by_dim[d] lists (d+1)-vertex faces.
struct SimplicialComplexData
{
    std::vector<std::string> vertex_labels;
    std::vector<std::vector<std::vector<int>>> faces_by_dim;

    /// Downward closure of the given faces, vertices 0..count-1.
    static SimplicialComplexData from_maximal_faces(std::vector<std::string> labels,
                                                    const std::vector<std::vector<int>>& maximal)
    {
        std::set<std::vector<int>> all;
        for (auto f : maximal) {
            std::sort(f.begin(), f.end());
            const unsigned size = static_cast<unsigned>(f.size());
            for (unsigned sub = 1; sub < (1u << size); ++sub) {
                std::vector<int> s;
                for (unsigned i = 0; i < size; ++i)
                    if ((sub >> i) & 1u) s.push_back(f[i]);
                all.insert(s);
            }
        }
        SimplicialComplexData c;
        c.vertex_labels = std::move(labels);
        for (const auto& f : all) {
            if (c.faces_by_dim.size() < f.size()) c.faces_by_dim.resize(f.size());
            c.faces_by_dim[f.size() - 1].push_back(f);
        }
        c.validate();
        return c;
    }

    std::vector<std::size_t> fvector() const
    {
        std::vector<std::size_t> f;
        for (const auto& d : faces_by_dim) f.push_back(d.size());
        return f;
    }

    /// Throws std::logic_error unless the face lists are closed under subsets and duplicate-free.
    void validate() const
    {
        std::set<std::vector<int>> all;
        for (std::size_t d = 0; d < faces_by_dim.size(); ++d)
            for (const auto& f : faces_by_dim[d]) {
                if (f.size() != d + 1 || !std::is_sorted(f.begin(), f.end()) ||
                    std::adjacent_find(f.begin(), f.end()) != f.end())
                    throw std::logic_error("simplicial complex: malformed face");
                for (int v : f)
                    if (v < 0 || static_cast<std::size_t>(v) >= vertex_labels.size())
                        throw std::logic_error("simplicial complex: vertex out of range");
                if (!all.insert(f).second) throw std::logic_error("simplicial complex: duplicate face");
            }
        for (const auto& f : all) {
            if (f.size() < 2) continue;
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                auto g = f;
                g.erase(g.begin() + static_cast<long>(drop));
                if (!all.count(g)) throw std::logic_error("simplicial complex: not closed under taking faces");
            }
        }
    }
};

/// Ranks of reduced rational homology in degrees 0..top.
inline std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplexData& c)
{
    c.validate();
    const std::size_t top = c.faces_by_dim.size();
    if (top == 0) return {};
    // boundary_rank[d] = rank of d_d : C_d -> C_{d-1}; d_0 is the augmentation.
    std::vector<std::size_t> boundary_rank(top + 1, 0);
    boundary_rank[0] = c.faces_by_dim[0].empty() ? 0 : 1;
    for (std::size_t d = 1; d < top; ++d) {
        const auto& lower = c.faces_by_dim[d - 1];
        const auto& upper = c.faces_by_dim[d];
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
        RationalMatrix m(lower.size(), upper.size());
        for (std::size_t j = 0; j < upper.size(); ++j)
            for (std::size_t drop = 0; drop < upper[j].size(); ++drop) {
                auto g = upper[j];
                g.erase(g.begin() + static_cast<long>(drop));
                m(index.at(g), j) = drop % 2 == 0 ? 1 : -1;
            }
        boundary_rank[d] = rank(m);
    }
    std::vector<std::size_t> out;
    for (std::size_t d = 0; d < top; ++d)
        out.push_back(c.faces_by_dim[d].size() - boundary_rank[d] - boundary_rank[d + 1]);
    return out;
}

enum class CutType { diagonal, corner, other };

/// Corner cut: cells of 4 and 7 vertices; diagonal cut: two prisms of 6.
inline CutType classify_two_cell_subdivision(const RegularSubdivision& s)
{
    if (s.cells.size() != 2) return CutType::other;
    const int a = std::popcount(s.cells[0]), b = std::popcount(s.cells[1]);
    if (std::min(a, b) == 4 && std::max(a, b) == 7) return CutType::corner;
    if (a == 6 && b == 6) return CutType::diagonal;
    return CutType::other;
}

struct TM13Complex
{
    SimplicialComplexData complex;
    std::vector<CutType> vertex_types;
    std::vector<RationalVector> vertex_lifts;
    std::vector<Triangulation> facet_triangulations;  ///< triangulations of the 4-dimensional faces
    std::vector<RationalVector> face_points;          ///< relative-interior lifts of kept faces
    std::vector<MembershipResult> face_witnesses;
};

/**
 * Faces of the secondary sphere whose relative-interior lifts lie in TM^1_3.
 * Throws std::logic_error if the kept faces are not closed under taking faces
 * or are not simplices.
 */
inline TM13Complex tm13_subcomplex(const SecondaryFan& fan, unsigned threads = 1)
{
    auto membership = parallel_map(fan.faces.size(), threads, [&](std::size_t i) {
        return membership_tm1(TropicalPoint(fan_cube_dim, fan.interior_point(fan.faces[i])));
    });
    std::set<std::vector<int>> kept;
    for (std::size_t i = 0; i < fan.faces.size(); ++i)
        if (membership[i].member) kept.insert(fan.faces[i].rays);

    for (const auto& f : fan.faces) {
        if (!kept.count(f.rays)) continue;
        if (static_cast<int>(f.rays.size()) != f.dim)
            throw std::logic_error("tm13_subcomplex: kept face is not a simplex");
        for (const auto& g : fan.faces)
            if (std::includes(f.rays.begin(), f.rays.end(), g.rays.begin(), g.rays.end()) && !kept.count(g.rays))
                throw std::logic_error("tm13_subcomplex: membership not closed under faces");
    }

    TM13Complex out;
    std::map<int, int> vertex_of_ray;
    int corners = 0, diagonals = 0;
    std::vector<std::string> labels;
    for (const auto& f : fan.faces) {
        if (f.dim != 1 || !kept.count(f.rays)) continue;
        const int ray = f.rays.front();
        const auto type = classify_two_cell_subdivision(regular_subdivision_from_lift(fan.rays[ray]));
        if (type == CutType::other) throw std::logic_error("tm13_subcomplex: vertex is not a two-region cut");
        vertex_of_ray[ray] = static_cast<int>(labels.size());
        labels.push_back(type == CutType::corner ? "V" + std::to_string(++corners)
                                                 : "D" + std::to_string(++diagonals));
        out.vertex_types.push_back(type);
        out.vertex_lifts.push_back(fan.rays[ray]);
    }
    std::vector<std::vector<int>> faces;
    for (std::size_t i = 0; i < fan.faces.size(); ++i) {
        const auto& f = fan.faces[i];
        if (!kept.count(f.rays)) continue;
        std::vector<int> s;
        for (int r : f.rays) s.push_back(vertex_of_ray.at(r));
        std::sort(s.begin(), s.end());
        faces.push_back(std::move(s));
        out.face_points.push_back(fan.interior_point(f));
        out.face_witnesses.push_back(membership[i]);
    }
    out.complex = SimplicialComplexData::from_maximal_faces(labels, faces);
    if (out.complex.fvector().size() > 0) {
        std::size_t total = 0;
        for (auto x : out.complex.fvector()) total += x;
        if (total != faces.size()) throw std::logic_error("tm13_subcomplex: closure added faces outside the fan");
    }
    for (std::size_t ti = 0; ti < fan.triangulations.size(); ++ti)
        if (kept.count(fan.faces[fan.maximal_face_of[ti]].rays)) out.facet_triangulations.push_back(fan.triangulations[ti]);
    return out;
}

/// Triangulation export: one tetrahedron per line as 4 vertex bit strings.
inline std::string format_triangulation(const Triangulation& t)
{
    std::string out;
    for (auto c : t.cells) out += format_cell(c) + "\n";
    return out;
}

/// Image of a triangulation under a cube symmetry.
inline Triangulation apply_symmetry(const CubeSymmetry& g, const Triangulation& t)
{
    Triangulation out;
    for (auto c : t.cells) {
        CellMask m = 0;
        for (auto v : cell_vertices(c)) m |= 1u << g.apply(v, fan_cube_dim);
        out.cells.push_back(m);
    }
    std::sort(out.cells.begin(), out.cells.end());
    return out;
}

}  // namespace rbmtrop
