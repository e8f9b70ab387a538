#pragma once

#include "cyclo.hpp"
#include "tiling.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixplat {

// ---- upper half-space model ----

class IdealPoint {
public:
    static IdealPoint infinity() { return IdealPoint(); }
    static IdealPoint finite(CycNum z) { return IdealPoint(std::move(z)); }
    bool is_infinity() const { return !z_; }
    const CycNum& value() const {
        if (!z_) throw std::logic_error("point at infinity has no coordinate");
        return *z_;
    }
    friend bool operator==(const IdealPoint& a, const IdealPoint& b) { return a.z_ == b.z_; }
    std::string str() const { return z_ ? z_->str() : "inf"; }

private:
    IdealPoint() = default;
    explicit IdealPoint(CycNum z) : z_(std::move(z)) {}
    std::optional<CycNum> z_;
};

enum class PolyhedronKind { Tetrahedron, Octahedron };

struct IdealPolyhedron {
    PolyhedronKind kind;
    std::vector<IdealPoint> vertices;
};

inline CycNum half_one_plus_i() { return (CycNum(Rational(1)) + CycNum::imag_unit()) * Rational(1, 2); }

inline IdealPolyhedron standard_polyhedron(PolyhedronKind kind) {
    using P = IdealPoint;
    CycNum one(Rational(1)), i = CycNum::imag_unit();
    if (kind == PolyhedronKind::Tetrahedron)
        return {kind, {P::finite(CycNum()), P::finite(one), P::infinity(), P::finite(CycNum::omega())}};
    return {kind, {P::finite(CycNum()), P::finite(one), P::infinity(), P::finite(one + i), P::finite(i),
                   P::finite(half_one_plus_i())}};
}

inline bool in_standard_position(const IdealPolyhedron& p) {
    auto s = standard_polyhedron(p.kind);
    if (s.vertices.size() != p.vertices.size()) return false;
    for (auto& v : s.vertices)
        if (std::find(p.vertices.begin(), p.vertices.end(), v) == p.vertices.end()) return false;
    return true;
}

// Cross-ratio shapes at the vertical edges.  The octahedron is cut into four tetrahedra around the
// edge from infinity to (1+i)/2, and each is read at its edge (infinity, q).
inline std::vector<CycNum> shape_parameters(const IdealPolyhedron& p) {
    if (!in_standard_position(p)) throw std::invalid_argument("polyhedron is not in standard position");
    if (p.kind == PolyhedronKind::Tetrahedron) return {CycNum::omega() / CycNum(Rational(1))};
    CycNum one(Rational(1)), i = CycNum::imag_unit();
    std::vector<CycNum> ring{CycNum(), one, one + i, i};
    CycNum c = half_one_plus_i();
    std::vector<CycNum> out;
    for (std::size_t k = 0; k < 4; ++k) out.push_back((c - ring[k]) / (ring[(k + 1) % 4] - ring[k]));
    return out;
}

// Does the field generated by a tetrahedral shape w and an octahedral shape s contain z12?
// 2s - 1 is i and 2w - 1 is i sqrt3, so z12 = (sqrt3 + i)/2 follows.
inline bool shapes_generate_cyclotomic_field(const CycNum& w, const CycNum& s) {
    CycNum one(Rational(1));
    CycNum i = s * Rational(2) - one;
    CycNum isq3 = w * Rational(2) - one;
    if (!(i * i == -one) || !(isq3 * isq3 == CycNum(Rational(-3)))) return false;
    CycNum sqrt3 = -(i * isq3);
    return (sqrt3 + i) * Rational(1, 2) == CycNum::zeta();
}

struct Horoball {
    IdealPoint centre;
    Rational size;  // diameter, or height when centred at infinity
};

inline std::vector<Horoball> packing_for(const IdealPolyhedron& p) {
    if (!in_standard_position(p)) throw std::invalid_argument("polyhedron is not in standard position");
    std::vector<Horoball> out;
    for (auto& v : p.vertices) {
        if (v.is_infinity()) out.push_back({v, Rational(1)});
        else if (p.kind == PolyhedronKind::Octahedron && v.value() == half_one_plus_i()) out.push_back({v, Rational(1, 2)});
        else out.push_back({v, Rational(1)});
    }
    return out;
}

// >0 disjoint, 0 tangent, <0 overlapping
inline int horoball_separation(const Horoball& a, const Horoball& b) {
    if (a.centre.is_infinity() && b.centre.is_infinity()) return -1;
    if (a.centre.is_infinity() || b.centre.is_infinity()) {
        const Rational& h = a.centre.is_infinity() ? a.size : b.size;
        const Rational& d = a.centre.is_infinity() ? b.size : a.size;
        return sgn(h - d);
    }
    SqrtThreeRat gap = (a.centre.value() - b.centre.value()).norm_sq() - SqrtThreeRat(a.size * b.size);
    return gap.sign();
}

struct H3Point {
    CycNum z;
    SqrtThreeRat height_sq;
};

inline std::optional<H3Point> tangency_point(const Horoball& a, const Horoball& b) {
    if (horoball_separation(a, b) != 0) return std::nullopt;
    if (a.centre.is_infinity()) return H3Point{b.centre.value(), SqrtThreeRat(b.size * b.size)};
    if (b.centre.is_infinity()) return H3Point{a.centre.value(), SqrtThreeRat(a.size * a.size)};
    Rational r1 = a.size / 2, r2 = b.size / 2;
    CycNum z = a.centre.value() + (b.centre.value() - a.centre.value()) * Rational(r1 / (r1 + r2));
    Rational t = 2 * r1 * r2 / (r1 + r2);
    return H3Point{z, SqrtThreeRat(t * t)};
}

// Geodesic plane: hemisphere |z - c|^2 + t^2 = r^2 or vertical plane Re(conj(n) z) = d.
struct HalfSpace {
    enum class Boundary { Hemisphere, Vertical } boundary = Boundary::Hemisphere;
    CycNum centre;
    SqrtThreeRat radius_sq;
    CycNum normal;
    SqrtThreeRat offset;
    bool inside;  // the half-space is the inside of the hemisphere / the side Re(conj(n) z) <= d

    // sign of the defining function; <= 0 on the boundary side that is inside
    int side(const H3Point& p) const {
        SqrtThreeRat f = boundary == Boundary::Hemisphere ? (p.z - centre).norm_sq() + p.height_sq - radius_sq
                                                          : re(p.z * normal.conj()) - offset;
        return f.sign();
    }
    bool on_boundary(const H3Point& p) const { return side(p) == 0; }
    bool contains(const H3Point& p) const {
        int s = side(p);
        if (boundary == Boundary::Hemisphere) return inside ? s <= 0 : s >= 0;
        return inside ? s <= 0 : s >= 0;
    }
};

// Points at least as close to a as to b.
inline HalfSpace halfspace_between(const Horoball& a, const Horoball& b) {
    if (horoball_separation(a, b) < 0) throw std::invalid_argument("horoballs overlap");
    HalfSpace h;
    if (a.centre.is_infinity() || b.centre.is_infinity()) {
        const Horoball& fin = a.centre.is_infinity() ? b : a;
        const Horoball& inf = a.centre.is_infinity() ? a : b;
        h.centre = fin.centre.value();
        h.radius_sq = SqrtThreeRat(inf.size * fin.size);
        h.inside = !a.centre.is_infinity();
        return h;
    }
    const CycNum &q1 = a.centre.value(), &q2 = b.centre.value();
    const Rational &d1 = a.size, &d2 = b.size;
    if (d1 == d2) {
        h.boundary = HalfSpace::Boundary::Vertical;
        h.normal = q2 - q1;
        h.offset = (q2.norm_sq() - q1.norm_sq()) * SqrtThreeRat(Rational(1, 2));
        h.inside = true;
        return h;
    }
    // d2 |z-q1|^2 - d1 |z-q2|^2 + (d2-d1) t^2 = 0
    Rational k = d2 - d1;
    h.centre = (q1 * d2 - q2 * d1) * Rational(1 / k);
    h.radius_sq = h.centre.norm_sq() - (q1.norm_sq() * SqrtThreeRat(d2) - q2.norm_sq() * SqrtThreeRat(d1)) / SqrtThreeRat(k);
    h.inside = k > 0;
    return h;
}

struct VoronoiCell {
    std::vector<HalfSpace> faces;     // defining half-spaces
    std::vector<CycNum> neighbours;   // horoball centres across each face
    H3Point apex;
    std::vector<SqrtThreeRat> dihedral_cos;  // cos of the cell angle at each pair of adjacent faces
    bool redundant_checked = false;   // remaining half-spaces shown redundant
    bool avoids_far_faces = false;    // cell misses the faces away from the vertex
};

namespace detail {

// Exact circumcentre of three points given by their coordinates.
inline CycNum circumcentre(const CycNum& a, const CycNum& b, const CycNum& c) {
    // solve |z-a|^2 = |z-b|^2 = |z-c|^2 as a linear system in Re z, Im z
    SqrtThreeRat ax = re(a), ay = im(a), bx = re(b), by = im(b), cx = re(c), cy = im(c);
    SqrtThreeRat two(Rational(2));
    SqrtThreeRat a11 = two * (bx - ax), a12 = two * (by - ay), a21 = two * (cx - ax), a22 = two * (cy - ay);
    SqrtThreeRat r1 = b.norm_sq() - a.norm_sq(), r2 = c.norm_sq() - a.norm_sq();
    SqrtThreeRat det = a11 * a22 - a12 * a21;
    if (det.is_zero()) throw std::invalid_argument("collinear points");
    return from_re_im((r1 * a22 - r2 * a12) / det, (a11 * r2 - a21 * r1) / det);
}

// cos of the angle inside the cell (outside both balls) between two hemispheres, certified as
// -(r1^2 + r2^2 - d^2) / (2 r1 r2) through its square and sign.
inline std::optional<SqrtThreeRat> cell_angle_cos(const HalfSpace& a, const HalfSpace& b) {
    SqrtThreeRat d2 = (a.centre - b.centre).norm_sq();
    SqrtThreeRat num = a.radius_sq + b.radius_sq - d2;
    SqrtThreeRat c2 = num * num / (SqrtThreeRat(Rational(4)) * a.radius_sq * b.radius_sq);
    // only rational squares are handled; that covers the standard cells
    if (c2.sqrt3_part() != 0) return std::nullopt;
    Rational q = c2.rational_part();
    mpz_class n = q.get_num(), d = q.get_den();
    mpz_class sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    Rational c(sn, sd);
    c.canonicalize();
    return SqrtThreeRat(num.sign() > 0 ? -c : c);
}

}  // namespace detail

// Voronoi cell of the horoball at infinity inside a standard polyhedron.
inline VoronoiCell voronoi_cell(const IdealPolyhedron& p, const IdealPoint& vertex) {
    if (!in_standard_position(p)) throw std::invalid_argument("polyhedron is not in standard position");
    if (!vertex.is_infinity()) throw std::invalid_argument("normalise so the vertex is at infinity");
    auto balls = packing_for(p);
    const Horoball* top = nullptr;
    for (auto& b : balls)
        if (b.centre.is_infinity()) top = &b;
    VoronoiCell cell;
    CycNum one(Rational(1)), i = CycNum::imag_unit();
    std::vector<CycNum> adj = p.kind == PolyhedronKind::Tetrahedron ? std::vector<CycNum>{CycNum(), one, CycNum::omega()}
                                                                   : std::vector<CycNum>{CycNum(), one, one + i, i};
    for (auto& q : adj) {
        const Horoball* b = nullptr;
        for (auto& x : balls)
            if (!x.centre.is_infinity() && x.centre.value() == q) b = &x;
        cell.faces.push_back(halfspace_between(*top, *b));
        cell.neighbours.push_back(q);
    }
    // apex: equal power with respect to every defining hemisphere
    CycNum z = detail::circumcentre(adj[0], adj[1], adj[2]);
    SqrtThreeRat t2 = cell.faces[0].radius_sq - (z - cell.faces[0].centre).norm_sq();
    cell.apex = {z, t2};
    for (auto& h : cell.faces)
        if (!h.on_boundary(cell.apex)) throw std::logic_error("apex misses a defining face");
    for (std::size_t k = 0; k < adj.size(); ++k) {
        auto c = detail::cell_angle_cos(cell.faces[k], cell.faces[(k + 1) % adj.size()]);
        if (!c) throw std::logic_error("dihedral angle not certified");
        cell.dihedral_cos.push_back(*c);
    }
    // Averaging: over the cell, avg_q (|x-q|^2 + t^2) >= R^2 with c the centroid of the q gives
    // |x-c|^2 + t^2 >= R^2 - avg |q-c|^2.  A hemisphere (c, r^2) is then avoided when r^2 is below.
    auto avg_bound = [&](const std::vector<CycNum>& qs, const CycNum& c) {
        SqrtThreeRat s;
        for (auto& q : qs) s += (q - c).norm_sq();
        return cell.faces[0].radius_sq - s / SqrtThreeRat(Rational(static_cast<long>(qs.size())));
    };
    auto centroid = [](const std::vector<CycNum>& qs) {
        CycNum s;
        for (auto& q : qs) s += q;
        return s * Rational(1, static_cast<long>(qs.size()));
    };
    if (p.kind == PolyhedronKind::Octahedron) {
        // the ball at (1+i)/2 gives a redundant half-space
        Horoball small{IdealPoint::finite(half_one_plus_i()), Rational(1, 2)};
        HalfSpace extra = halfspace_between(*top, small);
        cell.redundant_checked = !(avg_bound(adj, centroid(adj)) < extra.radius_sq) && extra.centre == centroid(adj);
        // faces away from infinity are (q_k, q_k+1, (1+i)/2); each lies on a hemisphere about the
        // midpoint of q_k q_k+1
        bool ok = true;
        for (std::size_t k = 0; k < 4; ++k) {
            std::vector<CycNum> pair{adj[k], adj[(k + 1) % 4]};
            CycNum m = centroid(pair);
            SqrtThreeRat face_r2 = (adj[k] - m).norm_sq();
            if (!((adj[k] - m).norm_sq() == (half_one_plus_i() - m).norm_sq())) ok = false;
            if (!(face_r2 < avg_bound(pair, m))) ok = false;
        }
        cell.avoids_far_faces = ok;
    } else {
        cell.redundant_checked = true;  // nothing else to drop
        // the single far face (0, 1, w) lies on the hemisphere through its vertices
        CycNum m = centroid(adj);
        SqrtThreeRat face_r2 = (adj[0] - m).norm_sq();
        cell.avoids_far_faces = face_r2 < avg_bound(adj, m) || face_r2 == avg_bound(adj, m);
    }
    return cell;
}

// ---- planar dual ----

struct DualFace {
    std::size_t vertex = 0;    // index into TilingIndex::vertices()
    std::string type;          // TTTTTT, OOTTT, OTOTT, OOOO
    std::vector<CycInt> centres6;  // ccw tile centres (six times)
    SqrtThreeRat area;
};

inline std::string face_type(const VertexStar& v) {
    std::string s;
    for (auto& c : v.corners) s.push_back(c.kind == TileKind::Triangle ? 'T' : 'O');
    std::string best;
    for (int rev = 0; rev < 2; ++rev) {
        std::string x = s;
        if (rev) std::reverse(x.begin(), x.end());
        for (std::size_t r = 0; r < x.size(); ++r) {
            std::string y = x.substr(r) + x.substr(0, r);
            if (best.empty() || y < best) best = y;
        }
    }
    return best;
}

struct DualTessellation {
    std::vector<DualFace> faces;
    bool duality_verified = false;  // dual edges on perpendicular bisectors, faces ccw convex
    SqrtThreeRat total_area;
};

inline SqrtThreeRat polygon_area6(const std::vector<CycInt>& p6) {
    SqrtThreeInt s;
    for (std::size_t k = 0; k < p6.size(); ++k) {
        const CycInt& a = p6[k];
        const CycInt& b = p6[(k + 1) % p6.size()];
        s += a.re2() * b.im2() - a.im2() * b.re2();
    }
    // doubled coordinates of six-scaled points: factor 4 * 36, shoelace 1/2
    return to_rat(s) / SqrtThreeRat(Rational(288));
}

inline DualTessellation dual_tessellation(const PeriodicTiling& t) {
    TilingIndex ix(t);
    ix.require_ok();
    DualTessellation d;
    bool ok = true;
    for (std::size_t vi = 0; vi < ix.vertices().size(); ++vi) {
        const VertexStar& v = ix.vertices()[vi];
        DualFace f;
        f.vertex = vi;
        f.type = face_type(v);
        for (auto& c : v.corners) f.centres6.push_back(t.tiles()[c.tile].centre6() + c.shift * std::int64_t(6));
        f.area = polygon_area6(f.centres6);
        // consecutive centres flank the edge leaving v along k_prev of the earlier corner; both must
        // be equidistant from its endpoints
        CycInt v6 = v.point * std::int64_t(6);
        for (std::size_t k = 0; k < v.corners.size(); ++k) {
            CycInt w6 = (v.point + unit_directions()[v.corners[k].k_prev]) * std::int64_t(6);
            for (auto* c : {&f.centres6[k], &f.centres6[(k + 1) % f.centres6.size()]})
                if (!(norm4(*c - v6) == norm4(*c - w6))) ok = false;
            if (cross_sign(f.centres6[k] - v6, f.centres6[(k + 1) % f.centres6.size()] - v6) <= 0) ok = false;
        }
        d.total_area += f.area;
        d.faces.push_back(std::move(f));
    }
    d.duality_verified = ok;
    return d;
}

// Is v the nearest tiling vertex to the rational point p (num/den)?  Exact comparison against
// vertices up to two cells away.
inline bool nearest_vertex_is(const TilingIndex& ix, const CycNum& p, const CycInt& v) {
    const PeriodicTiling& t = ix.tiling();
    SqrtThreeRat dv = (p - to_rat(v)).norm_sq();
    for (auto& w : ix.vertices())
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j) {
                CycInt q = w.point + t.frame().at(i, j);
                if (q == v) continue;
                if (!(dv < (p - to_rat(q)).norm_sq())) return false;
            }
    return true;
}

// Sample rational points strictly inside each dual face (convex combinations weighted towards
// the face's vertex) and check that the face's vertex is their unique nearest tiling vertex.
inline bool duality_roundtrip(const PeriodicTiling& t, std::size_t samples_per_face = 8, std::uint32_t seed = 12) {
    TilingIndex ix(t);
    ix.require_ok();
    DualTessellation d = dual_tessellation(t);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> w(1, 9);
    for (auto& f : d.faces) {
        const CycInt& v = ix.vertices()[f.vertex].point;
        for (std::size_t s = 0; s < samples_per_face; ++s) {
            std::size_t k = rng() % f.centres6.size();
            long wv = w(rng) + 1, wa = w(rng), wb = w(rng);
            CycNum a = to_rat(f.centres6[k]) * Rational(1, 6);
            CycNum b = to_rat(f.centres6[(k + 1) % f.centres6.size()]) * Rational(1, 6);
            CycNum p = (to_rat(v) * Rational(wv) + a * Rational(wa) + b * Rational(wb)) * Rational(1, wv + wa + wb);
            if (!nearest_vertex_is(ix, p, v)) return false;
        }
    }
    return true;
}

inline SqrtThreeRat min_valence6_distance_sq(const PeriodicTiling& input) {
    auto [b1, b2] = lagrange_reduce(input.t1(), input.t2());
    PeriodicTiling t(b1, b2, input.tiles());
    TilingIndex ix(t);
    ix.require_ok();
    std::vector<CycInt> six;
    for (auto& v : ix.vertices())
        if (v.config == "3^6") six.push_back(v.point);
    if (six.empty()) throw std::invalid_argument("tiling has no vertex surrounded by six triangles");
    std::optional<SqrtThreeInt> best;
    for (auto& a : six)
        for (auto& b : six)
            for (int i = -3; i <= 3; ++i)
                for (int j = -3; j <= 3; ++j) {
                    CycInt d = b + t.frame().at(i, j) - a;
                    if (d.is_zero()) continue;
                    SqrtThreeInt n = norm4(d);
                    if (!best || n < *best) best = n;
                }
    return to_rat(*best) / SqrtThreeRat(Rational(4));
}

}  // namespace mixplat
