#pragma once

#include "cyclo.hpp"
#include "geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixplat {

enum class TileKind : std::uint8_t { Triangle = 3, Square = 4 };

inline char kind_letter(TileKind k) { return k == TileKind::Triangle ? 'T' : 'S'; }
// interior angle and exterior turn, in steps of 30 degrees
inline int interior_steps(TileKind k) { return k == TileKind::Triangle ? 2 : 3; }
inline int turn_steps(TileKind k) { return k == TileKind::Triangle ? 4 : 3; }
inline std::size_t corner_count(TileKind k) { return k == TileKind::Triangle ? 3 : 4; }

using TileKey = std::array<std::int64_t, 17>;

struct Tile {
    TileKind kind = TileKind::Triangle;
    std::vector<CycInt> vertices;  // counterclockwise

    std::size_t size() const { return vertices.size(); }
    const CycInt& vertex(std::size_t j) const { return vertices[j % vertices.size()]; }
    int edge_dir(std::size_t j) const { return direction_of(vertex(j + 1) - vertex(j)); }

    // ccw tile with first vertex `start` and first edge along z^dir
    static Tile make(TileKind kind, const CycInt& start, int dir) {
        Tile t{kind, {}};
        CycInt p = start;
        for (std::size_t j = 0; j < corner_count(kind); ++j) {
            t.vertices.push_back(p);
            p += unit_directions()[mod12(dir + static_cast<int>(j) * turn_steps(kind))];
        }
        return t;
    }

    // six times the centre
    CycInt centre6() const {
        if (kind == TileKind::Triangle) return (vertices[0] + vertices[1] + vertices[2]) * std::int64_t(2);
        return (vertices[0] + vertices[2]) * std::int64_t(3);
    }
    Tile translated(const CycInt& s) const {
        Tile t = *this;
        for (auto& v : t.vertices) v += s;
        return t;
    }

    // unit edges with the correct turning
    bool well_formed() const {
        if (vertices.size() != corner_count(kind)) return false;
        int d0 = edge_dir(0);
        if (d0 < 0) return false;
        for (std::size_t j = 1; j < size(); ++j)
            if (edge_dir(j) != mod12(d0 + static_cast<int>(j) * turn_steps(kind))) return false;
        return true;
    }

    TileKey key() const {
        TileKey k{};
        k[0] = static_cast<std::int64_t>(kind);
        std::size_t m = 0;
        for (std::size_t j = 1; j < size(); ++j)
            if (vertices[j].coeffs() < vertices[m].coeffs()) m = j;
        for (std::size_t j = 0; j < size(); ++j)
            for (int c = 0; c < 4; ++c) k[1 + 4 * j + c] = vertex(m + j)[c];
        return k;
    }
    // same vertex cycle starting at the lexicographically least vertex
    Tile normalised() const {
        std::size_t m = 0;
        for (std::size_t j = 1; j < size(); ++j)
            if (vertices[j].coeffs() < vertices[m].coeffs()) m = j;
        Tile t{kind, {}};
        for (std::size_t j = 0; j < size(); ++j) t.vertices.push_back(vertex(m + j));
        return t;
    }
    friend bool operator==(const Tile& a, const Tile& b) { return a.key() == b.key(); }
};

// z -> z^rot * z + trans, or z -> z^rot * conj(z) + trans when reflecting
struct PlanarIsometry {
    int rot = 0;
    bool reflect = false;
    CycInt trans;

    CycInt apply(const CycInt& z) const { return (reflect ? z.conj() : z).mul_zeta_pow(rot) + trans; }
    // Rational points, given as num/scale with the same scale out.
    CycInt apply_scaled(const CycInt& num, std::int64_t scale) const {
        return (reflect ? num.conj() : num).mul_zeta_pow(rot) + trans * scale;
    }
    Tile apply(const Tile& t) const {
        Tile r{t.kind, {}};
        for (auto& v : t.vertices) r.vertices.push_back(apply(v));
        if (reflect) std::reverse(r.vertices.begin(), r.vertices.end());
        return r;
    }
    // this after o
    PlanarIsometry compose(const PlanarIsometry& o) const {
        PlanarIsometry r;
        r.rot = mod12(rot + (reflect ? -o.rot : o.rot));
        r.reflect = reflect != o.reflect;
        r.trans = (reflect ? o.trans.conj() : o.trans).mul_zeta_pow(rot) + trans;
        return r;
    }
    PlanarIsometry inverse() const {
        if (!reflect) return {mod12(-rot), false, -trans.mul_zeta_pow(-rot)};
        return {rot, true, -trans.conj().mul_zeta_pow(rot)};
    }
    friend bool operator==(const PlanarIsometry& a, const PlanarIsometry& b) {
        return a.rot == b.rot && a.reflect == b.reflect && a.trans == b.trans;
    }
    static PlanarIsometry translation(const CycInt& t) { return {0, false, t}; }
};

namespace detail {

// floor((a + b sqrt3) / den), den > 0
inline std::int64_t floor_div_sqrt3(std::int64_t a, std::int64_t b, std::int64_t den) {
    long double est = (static_cast<long double>(a) + static_cast<long double>(b) * 1.7320508075688772935L) / den;
    auto q = static_cast<std::int64_t>(std::floor(est));
    auto sign_at = [&](std::int64_t f) {
        __int128 ra = static_cast<__int128>(a) - static_cast<__int128>(f) * den;
        if (ra > INT64_MAX || ra < INT64_MIN) throw std::overflow_error("coordinate overflow");
        return SqrtThreeInt(static_cast<std::int64_t>(ra), b).sign();
    };
    while (sign_at(q) < 0) --q;
    while (sign_at(q + 1) >= 0) ++q;
    return q;
}

// floor(x / n) for x, n in Z[sqrt3], n != 0
inline std::int64_t floor_quot(const SqrtThreeInt& x, const SqrtThreeInt& n) {
    SqrtThreeInt r = x * n.galois();
    std::int64_t N = n.norm();
    if (N == 0) throw std::domain_error("division by zero");
    if (N < 0) { r = -r; N = -N; }
    return floor_div_sqrt3(r.rational_part(), r.sqrt3_part(), N);
}

// Hermite normal form over Z of integer rows, nonzero rows only.
inline std::vector<std::array<std::int64_t, 4>> hermite_rows(std::vector<std::array<std::int64_t, 4>> rows) {
    std::size_t r = 0;
    for (int col = 0; col < 4 && r < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                std::int64_t q = rows[i][col] / rows[r][col];
                for (int c = 0; c < 4; ++c) rows[i][c] -= q * rows[r][c];
                if (rows[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (r < rows.size() && rows[r][col] != 0) {
            if (rows[r][col] < 0)
                for (auto& x : rows[r]) x = -x;
            for (std::size_t i = 0; i < r; ++i) {
                std::int64_t q = rows[i][col] / rows[r][col];
                if (rows[i][col] - q * rows[r][col] < 0) --q;
                for (int c = 0; c < 4; ++c) rows[i][c] -= q * rows[r][c];
            }
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

}  // namespace detail

// Coordinates with respect to a lattice basis, computed exactly.
class LatticeFrame {
public:
    LatticeFrame(CycInt t1, CycInt t2) : t1_(std::move(t1)), t2_(std::move(t2)) {
        SqrtThreeInt X1 = t1_.re2(), Y1 = t1_.im2(), X2 = t2_.re2(), Y2 = t2_.im2();
        det4_ = X1 * Y2 - Y1 * X2;
        if (det4_.is_zero()) throw std::invalid_argument("degenerate lattice basis");
        SqrtThreeInt g = det4_.galois();
        den_ = det4_.norm();
        if (den_ < 0) { g = -g; den_ = -den_; }
        for (int j = 0; j < 4; ++j) {
            CycInt e = CycInt::zeta_pow(j);
            SqrtThreeInt X = e.re2(), Y = e.im2();
            alpha_[j] = (X * Y2 - Y * X2) * g;
            beta_[j] = (X1 * Y - Y1 * X) * g;
        }
    }
    const CycInt& t1() const { return t1_; }
    const CycInt& t2() const { return t2_; }
    CycInt at(std::int64_t i, std::int64_t j) const { return t1_ * i + t2_ * j; }

    // floor of the lattice coordinates of num/scale
    std::pair<std::int64_t, std::int64_t> floor_coords(const CycInt& num, std::int64_t scale = 1) const {
        auto [a, b] = raw(num);
        return {detail::floor_div_sqrt3(a.rational_part(), a.sqrt3_part(), den_ * scale),
                detail::floor_div_sqrt3(b.rational_part(), b.sqrt3_part(), den_ * scale)};
    }
    CycInt reduce(const CycInt& z) const {
        auto [i, j] = floor_coords(z);
        return z - at(i, j);
    }
    // num/scale reduced into the half-open cell, returned scaled
    CycInt reduce_scaled(const CycInt& num, std::int64_t scale) const {
        auto [i, j] = floor_coords(num, scale);
        return num - at(i, j) * scale;
    }
    std::optional<std::pair<std::int64_t, std::int64_t>> coords_if_lattice(const CycInt& z) const {
        auto [a, b] = raw(z);
        if (a.sqrt3_part() != 0 || b.sqrt3_part() != 0) return std::nullopt;
        if (a.rational_part() % den_ != 0 || b.rational_part() % den_ != 0) return std::nullopt;
        return std::pair{a.rational_part() / den_, b.rational_part() / den_};
    }
    bool contains(const CycInt& z) const { return coords_if_lattice(z).has_value(); }
    // approximate lattice coordinates
    std::pair<double, double> approx_coords(const CycInt& z) const {
        auto [a, b] = raw(z);
        return {a.approx() / den_, b.approx() / den_};
    }
    SqrtThreeRat covolume() const {
        SqrtThreeRat d = to_rat(det4_) / SqrtThreeRat(Rational(4));
        return d.sign() < 0 ? -d : d;
    }

private:
    std::pair<SqrtThreeInt, SqrtThreeInt> raw(const CycInt& z) const {
        SqrtThreeInt a, b;
        for (int j = 0; j < 4; ++j) {
            if (z[j] == 0) continue;
            a += alpha_[j] * SqrtThreeInt(z[j]);
            b += beta_[j] * SqrtThreeInt(z[j]);
        }
        return {a, b};
    }

    CycInt t1_, t2_;
    SqrtThreeInt det4_;
    std::array<SqrtThreeInt, 4> alpha_, beta_;
    std::int64_t den_ = 1;
};

// Lagrange-Gauss reduction; first vector is a shortest nonzero lattice vector.
inline std::pair<CycInt, CycInt> lagrange_reduce(CycInt b1, CycInt b2) {
    if (norm4(b2) < norm4(b1)) std::swap(b1, b2);
    for (int guard = 0; guard < 10000; ++guard) {
        SqrtThreeInt n1 = norm4(b1);
        // mu = round(<b1,b2>/|b1|^2)
        SqrtThreeInt x = dot4(b1, b2) * SqrtThreeInt(2) + n1;
        std::int64_t mu = detail::floor_quot(x, n1 * SqrtThreeInt(2));
        if (mu == 0) break;
        b2 -= b1 * mu;
        if (norm4(b2) < norm4(b1)) std::swap(b1, b2);
    }
    return {b1, b2};
}

// Hermite normal form basis of the Z-span of the given elements (must have rank 2).
inline std::pair<CycInt, CycInt> hermite_basis(const std::vector<CycInt>& gens) {
    std::vector<std::array<std::int64_t, 4>> rows;
    for (auto& g : gens) rows.push_back(g.coeffs());
    auto h = detail::hermite_rows(rows);
    if (h.size() != 2) throw std::logic_error("translation group does not have rank 2");
    return {CycInt(h[0]), CycInt(h[1])};
}

class PeriodicTiling {
public:
    PeriodicTiling(CycInt t1, CycInt t2, std::vector<Tile> tiles) : t1_(std::move(t1)), t2_(std::move(t2)) {
        try {
            frame_.emplace(t1_, t2_);
        } catch (const std::invalid_argument&) {
            raw_ = std::move(tiles);
            return;
        }
        std::map<TileKey, Tile> uniq;
        for (auto& t : tiles) {
            if (t.vertices.empty()) { raw_.push_back(t); continue; }
            Tile r = reduce(t);
            if (!uniq.emplace(r.key(), r).second) ++duplicates_;
        }
        for (auto& [k, t] : uniq) {
            index_.emplace(k, tiles_.size());
            tiles_.push_back(t);
        }
    }

    const CycInt& t1() const { return t1_; }
    const CycInt& t2() const { return t2_; }
    bool degenerate() const { return !frame_.has_value(); }
    const LatticeFrame& frame() const {
        if (!frame_) throw std::invalid_argument("degenerate lattice basis");
        return *frame_;
    }
    const std::vector<Tile>& tiles() const { return tiles_; }
    // tiles that could not be placed (degenerate basis or empty vertex list)
    const std::vector<Tile>& rejected() const { return raw_; }
    std::size_t duplicates() const { return duplicates_; }

    // translate so the least vertex sits in the cell; vertex cycle starts there
    Tile reduce(const Tile& t, CycInt* shift = nullptr) const {
        Tile n = t.normalised();
        CycInt v0 = n.vertices[0];
        CycInt s = frame().reduce(v0) - v0;
        if (shift) *shift = -s;
        return n.translated(s);
    }
    // i with t == tiles()[i] + shift
    std::optional<std::size_t> find(const Tile& t, CycInt* shift = nullptr) const {
        Tile r = reduce(t, shift);
        auto it = index_.find(r.key());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Tile& t) const { return find(t).has_value(); }

    std::size_t count(TileKind k) const {
        return static_cast<std::size_t>(std::count_if(tiles_.begin(), tiles_.end(), [k](auto& t) { return t.kind == k; }));
    }
    SqrtThreeRat covolume() const { return frame().covolume(); }
    SqrtThreeRat tile_area() const {
        return SqrtThreeRat(Rational(static_cast<long>(count(TileKind::Square))),
                            Rational(static_cast<long>(count(TileKind::Triangle))) / 4);
    }

private:
    CycInt t1_, t2_;
    std::optional<LatticeFrame> frame_;
    std::vector<Tile> tiles_, raw_;
    std::map<TileKey, std::size_t> index_;
    std::size_t duplicates_ = 0;
};

inline std::string point_text(const CycInt& z) {
    std::ostringstream os;
    os.precision(6);
    os << "(" << z.str() << ") ~ (" << z.re_approx() << ", " << z.im_approx() << ")";
    return os.str();
}

struct ValidationReport {
    bool ok = true;
    std::string code;     // empty when ok
    std::string message;  // first violation
    std::optional<CycInt> where;
};

struct Corner {
    std::size_t tile = 0;  // tiles()[tile] + shift has this corner
    std::size_t vi = 0;
    CycInt shift;
    int k_next = 0, k_prev = 0;  // the sector runs ccw from k_next to k_prev
    TileKind kind = TileKind::Triangle;
};

struct VertexStar {
    CycInt point;  // reduced
    std::vector<Corner> corners;  // ccw by k_next
    std::string config;
};

struct EdgeLink {
    std::size_t tile = 0;
    std::size_t edge = 0;
    CycInt shift;
};

inline std::string config_name(const std::vector<int>& cyc) {
    // least rotation or reflection, then run-length
    std::vector<int> best;
    for (int rev = 0; rev < 2; ++rev) {
        std::vector<int> s = cyc;
        if (rev) std::reverse(s.begin(), s.end());
        for (std::size_t r = 0; r < s.size(); ++r) {
            std::vector<int> c(s.begin() + r, s.end());
            c.insert(c.end(), s.begin(), s.begin() + r);
            if (best.empty() || c < best) best = c;
        }
    }
    std::string out;
    for (std::size_t i = 0; i < best.size();) {
        std::size_t j = i;
        while (j < best.size() && best[j] == best[i]) ++j;
        if (!out.empty()) out += ".";
        out += std::to_string(best[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline const std::set<std::string>& allowed_configs() {
    static const std::set<std::string> s{"3^6", "3^3.4^2", "3^2.4.3.4", "4^4"};
    return s;
}

// Vertex stars and edge adjacency; records the first invariant violation.
class TilingIndex {
public:
    explicit TilingIndex(const PeriodicTiling& t) : t_(&t) { build(); }

    const ValidationReport& report() const { return report_; }
    bool ok() const { return report_.ok; }
    void require_ok() const {
        if (!ok()) throw std::invalid_argument("invalid tiling: " + report_.code + ": " + report_.message);
    }
    const PeriodicTiling& tiling() const { return *t_; }
    const std::vector<VertexStar>& vertices() const { return vertices_; }
    std::optional<std::size_t> vertex_index(const CycInt& p, CycInt* shift = nullptr) const {
        CycInt r = t_->frame().reduce(p);
        if (shift) *shift = p - r;
        auto it = vmap_.find(r.coeffs());
        if (it == vmap_.end()) return std::nullopt;
        return it->second;
    }
    const EdgeLink& neighbour(std::size_t tile, std::size_t edge) const { return links_.at(tile).at(edge); }
    TileKind neighbour_kind(std::size_t tile, std::size_t edge) const {
        return t_->tiles()[neighbour(tile, edge).tile].kind;
    }
    std::set<std::string> configurations() const {
        std::set<std::string> s;
        for (auto& v : vertices_) s.insert(v.config);
        return s;
    }

private:
    void fail(std::string code, std::string msg, std::optional<CycInt> where = std::nullopt) {
        if (!report_.ok) return;
        report_.ok = false;
        report_.code = std::move(code);
        report_.message = std::move(msg);
        report_.where = std::move(where);
    }

    void build() {
        const PeriodicTiling& t = *t_;
        if (t.t1().is_zero() || t.t2().is_zero() || t.degenerate())
            return fail("degenerate-basis", "lattice basis vectors are zero or parallel");
        if (t.tiles().empty() && t.rejected().empty()) return fail("empty", "tiling has no tiles");
        if (!t.rejected().empty()) return fail("bad-tile", "tile with no vertices");
        for (auto& tile : t.tiles()) {
            if (tile.vertices.size() != corner_count(tile.kind))
                return fail("bad-tile", std::string("tile of kind ") + kind_letter(tile.kind) + " has " +
                                            std::to_string(tile.vertices.size()) + " vertices",
                            tile.vertices[0]);
            for (std::size_t j = 0; j < tile.size(); ++j)
                if (tile.edge_dir(j) < 0)
                    return fail("edge-length", "edge is not a unit vector at angle a multiple of 30 degrees from " +
                                                   point_text(tile.vertex(j)),
                                tile.vertex(j));
            if (!tile.well_formed())
                return fail("tile-angle", "tile is not a counterclockwise regular polygon at " + point_text(tile.vertices[0]),
                            tile.vertices[0]);
        }
        if (t.duplicates() > 0) return fail("duplicate-tile", "the same tile is listed twice modulo the lattice");

        const LatticeFrame& f = t.frame();
        std::map<std::array<std::int64_t, 4>, std::vector<Corner>> stars;
        std::map<std::pair<std::array<std::int64_t, 4>, int>, EdgeLink> edges;
        for (std::size_t i = 0; i < t.tiles().size(); ++i) {
            const Tile& tile = t.tiles()[i];
            for (std::size_t j = 0; j < tile.size(); ++j) {
                const CycInt& v = tile.vertex(j);
                CycInt r = f.reduce(v);
                CycInt sh = r - v;
                int kn = tile.edge_dir(j);
                int kp = direction_of(tile.vertex(j + tile.size() - 1) - v);
                stars[r.coeffs()].push_back({i, j, sh, kn, kp, tile.kind});
                auto [it, fresh] = edges.emplace(std::pair{r.coeffs(), kn}, EdgeLink{i, j, sh});
                if (!fresh) return fail("overlap", "two tiles lie on the same side of the edge at " + point_text(r), r);
            }
        }
        for (auto& [key, cs] : stars) {
            CycInt p{key};
            int sum = 0;
            for (auto& c : cs) sum += interior_steps(c.kind);
            if (sum != 12)
                return fail("angle-sum", "angle sum " + std::to_string(sum * 30) + " degrees (not 360) at vertex " + point_text(p), p);
            std::sort(cs.begin(), cs.end(), [](auto& a, auto& b) { return a.k_next < b.k_next; });
            for (std::size_t m = 0; m < cs.size(); ++m)
                if (cs[m].k_prev != cs[(m + 1) % cs.size()].k_next)
                    return fail("overlap", "tile corners overlap at vertex " + point_text(p), p);
            std::vector<int> seq;
            for (auto& c : cs) seq.push_back(static_cast<int>(corner_count(c.kind)));
            std::string name = config_name(seq);
            if (!allowed_configs().count(name))
                return fail("vertex-configuration", "vertex configuration " + name + " at " + point_text(p), p);
            vmap_.emplace(key, vertices_.size());
            vertices_.push_back({p, std::move(cs), name});
        }
        links_.assign(t.tiles().size(), {});
        for (std::size_t i = 0; i < t.tiles().size(); ++i) {
            const Tile& tile = t.tiles()[i];
            links_[i].resize(tile.size());
            for (std::size_t j = 0; j < tile.size(); ++j) {
                const CycInt& b = tile.vertex(j + 1);
                CycInt rb = f.reduce(b);
                auto it = edges.find({rb.coeffs(), mod12(tile.edge_dir(j) + 6)});
                if (it == edges.end())
                    return fail("unmatched-edge", "edge from " + point_text(tile.vertex(j)) + " has no tile on its other side",
                                tile.vertex(j));
                // neighbour vertex vi sits at rb; actual neighbour = stored + (b - stored vertex)
                const EdgeLink& e = it->second;
                const CycInt& nv = t.tiles()[e.tile].vertex(e.edge);
                links_[i][j] = {e.tile, e.edge, b - nv};
            }
        }
        if (t.tile_area() != t.covolume())
            return fail("area-balance", "tile area " + t.tile_area().str() + " differs from covolume " + t.covolume().str());
    }

    const PeriodicTiling* t_;
    ValidationReport report_;
    std::vector<VertexStar> vertices_;
    std::map<std::array<std::int64_t, 4>, std::size_t> vmap_;
    std::vector<std::vector<EdgeLink>> links_;
};

inline ValidationReport validate(const PeriodicTiling& t) { return TilingIndex(t).report(); }

// ---- triangle types ----

enum class TriangleType { TTT, OTT, OOT, OOO };

inline std::string to_string(TriangleType t) {
    switch (t) {
        case TriangleType::TTT: return "TTT";
        case TriangleType::OTT: return "OTT";
        case TriangleType::OOT: return "OOT";
        case TriangleType::OOO: return "OOO";
    }
    return "?";
}

inline TriangleType triangle_type_at(const TilingIndex& ix, std::size_t i) {
    const Tile& tile = ix.tiling().tiles().at(i);
    if (tile.kind != TileKind::Triangle) throw std::invalid_argument("tile is a square");
    int squares = 0;
    for (std::size_t j = 0; j < 3; ++j) squares += ix.neighbour_kind(i, j) == TileKind::Square;
    return static_cast<TriangleType>(squares);
}

inline TriangleType triangle_type(const PeriodicTiling& t, const Tile& tri) {
    if (tri.kind != TileKind::Triangle) throw std::invalid_argument("tile is a square");
    auto i = t.find(tri);
    if (!i) throw std::invalid_argument("tile is not in the tiling");
    TilingIndex ix(t);
    ix.require_ok();
    return triangle_type_at(ix, *i);
}

inline std::map<TriangleType, std::size_t> triangle_census(const TilingIndex& ix) {
    std::map<TriangleType, std::size_t> c;
    for (std::size_t i = 0; i < ix.tiling().tiles().size(); ++i)
        if (ix.tiling().tiles()[i].kind == TileKind::Triangle) ++c[triangle_type_at(ix, i)];
    return c;
}

struct TypeCheck {
    bool pass = true;
    std::string witness;
};

inline TypeCheck check_type_constraints(const PeriodicTiling& t) {
    TilingIndex ix(t);
    ix.require_ok();
    auto c = triangle_census(ix);
    auto has = [&](TriangleType x) { return c.count(x) > 0; };
    if (has(TriangleType::OOT) && !has(TriangleType::OOO) && !has(TriangleType::OTT))
        return {false, "OOT present, no OOO/OTT"};
    if (has(TriangleType::OTT) && !has(TriangleType::OOT) && !has(TriangleType::TTT))
        return {false, "OTT present, no OOT/TTT"};
    return {};
}

// ---- lattice utilities ----

// All translations preserving the tiling, as a (possibly finer) lattice.
inline PeriodicTiling with_full_translation_lattice(const PeriodicTiling& t) {
    TilingIndex ix(t);
    ix.require_ok();
    std::vector<CycInt> gens{t.t1(), t.t2()};
    const CycInt& v0 = t.tiles()[0].vertices[0];
    for (auto& star : ix.vertices()) {
        CycInt tau = star.point - v0;
        bool ok = true;
        for (auto& tile : t.tiles())
            if (!t.contains(tile.translated(tau))) { ok = false; break; }
        if (ok) gens.push_back(tau);
    }
    auto [b1, b2] = hermite_basis(gens);
    auto [r1, r2] = lagrange_reduce(b1, b2);
    if (cross_sign(r1, r2) < 0) r2 = -r2;
    PeriodicTiling coarse(r1, r2, t.tiles());
    return PeriodicTiling(r1, r2, coarse.tiles());  // drop the now-repeated tiles
}

inline SqrtThreeRat min_translation_sq(const PeriodicTiling& t) {
    auto [b1, b2] = lagrange_reduce(t.t1(), t.t2());
    (void)b2;
    return to_rat(norm4(b1)) / SqrtThreeRat(Rational(4));
}

struct CanonicalForm {
    std::vector<std::int64_t> data;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    // short stable digest for display
    std::string digest() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : data) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

// Isometry-invariant form: primitive lattice, every vertex moved to 0, every rotation.
inline CanonicalForm canonical_form(const PeriodicTiling& t, bool with_reflections = false) {
    PeriodicTiling p = with_full_translation_lattice(t);
    TilingIndex ix(p);
    CanonicalForm best;
    bool first = true;
    for (auto& star : ix.vertices()) {
        for (int refl = 0; refl <= (with_reflections ? 1 : 0); ++refl) {
            for (int k = 0; k < 12; ++k) {
                // g(z) = z^k * R(z - v)
                PlanarIsometry g{k, refl == 1, CycInt()};
                g.trans = -g.apply(star.point);
                auto [b1, b2] = hermite_basis({g.apply(p.t1()) - g.trans, g.apply(p.t2()) - g.trans});
                std::vector<Tile> moved;
                for (auto& tile : p.tiles()) moved.push_back(g.apply(tile));
                PeriodicTiling q(b1, b2, moved);
                CanonicalForm cf;
                for (int c = 0; c < 4; ++c) cf.data.push_back(b1[c]);
                for (int c = 0; c < 4; ++c) cf.data.push_back(b2[c]);
                for (auto& tile : q.tiles()) {
                    auto key = tile.key();
                    cf.data.insert(cf.data.end(), key.begin(), key.begin() + 1 + 4 * static_cast<long>(tile.size()));
                }
                if (first || cf < best) best = std::move(cf);
                first = false;
            }
        }
    }
    return best;
}

// One tile per orbit of `sub`, grown outward from the first tile by breadth-first search.
inline std::vector<Tile> fundamental_domain(const PeriodicTiling& t, const CycInt& s1, const CycInt& s2) {
    TilingIndex ix(t);
    ix.require_ok();
    const LatticeFrame& f = t.frame();
    auto c1 = f.coords_if_lattice(s1), c2 = f.coords_if_lattice(s2);
    if (!c1 || !c2) throw std::invalid_argument("sub is not a sublattice of the translation lattice");
    std::int64_t index = c1->first * c2->second - c1->second * c2->first;
    if (index == 0) throw std::invalid_argument("sub is degenerate");
    index = std::llabs(index);
    LatticeFrame sub(s1, s2);
    auto key = [&](const Tile& x) {
        Tile n = x.normalised();
        CycInt v = n.vertices[0];
        return n.translated(sub.reduce(v) - v).key();
    };
    std::vector<Tile> out;
    std::set<TileKey> seen;
    std::deque<std::pair<std::size_t, CycInt>> queue;  // stored tile + shift
    queue.push_back({0, CycInt()});
    seen.insert(key(t.tiles()[0]));
    while (!queue.empty()) {
        auto [i, sh] = queue.front();
        queue.pop_front();
        Tile actual = t.tiles()[i].translated(sh);
        out.push_back(actual);
        for (std::size_t j = 0; j < actual.size(); ++j) {
            const EdgeLink& e = ix.neighbour(i, j);
            CycInt nsh = sh + e.shift;
            if (seen.insert(key(t.tiles()[e.tile].translated(nsh))).second) queue.push_back({e.tile, nsh});
        }
    }
    if (static_cast<std::int64_t>(out.size()) != index * static_cast<std::int64_t>(t.tiles().size()))
        throw std::logic_error("fundamental domain has the wrong size");
    return out;
}

// ---- local patterns ----

// Pattern "A-B": tile of class A next to a tile of class B across an edge; "A" alone: tiles of class A.
// Classes: S, T (any triangle), TTT, OTT, OOT, OOO.
struct PatternMatch {
    std::size_t tile;
    std::optional<std::size_t> edge;
    std::optional<EdgeLink> other;
};

inline std::vector<PatternMatch> find_pattern(const PeriodicTiling& t, const std::string& pattern) {
    TilingIndex ix(t);
    ix.require_ok();
    auto cls = [&](std::size_t i) {
        const Tile& x = t.tiles()[i];
        return x.kind == TileKind::Square ? std::string("S") : to_string(triangle_type_at(ix, i));
    };
    auto matches = [&](std::size_t i, const std::string& want) {
        if (want == "T") return t.tiles()[i].kind == TileKind::Triangle;
        static const std::set<std::string> known{"S", "TTT", "OTT", "OOT", "OOO"};
        if (!known.count(want)) throw std::invalid_argument("unknown tile class '" + want + "'");
        return cls(i) == want;
    };
    std::vector<PatternMatch> out;
    auto dash = pattern.find('-');
    if (dash == std::string::npos) {
        for (std::size_t i = 0; i < t.tiles().size(); ++i)
            if (matches(i, pattern)) out.push_back({i, std::nullopt, std::nullopt});
        return out;
    }
    std::string a = pattern.substr(0, dash), b = pattern.substr(dash + 1);
    std::set<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> seen;
    for (std::size_t i = 0; i < t.tiles().size(); ++i) {
        if (!matches(i, a)) continue;
        for (std::size_t j = 0; j < t.tiles()[i].size(); ++j) {
            const EdgeLink& e = ix.neighbour(i, j);
            if (!matches(e.tile, b)) continue;
            std::pair<std::size_t, std::size_t> h1{i, j}, h2{e.tile, e.edge};
            if (seen.count({h2, h1})) continue;  // symmetric pattern, already listed
            seen.insert({h1, h2});
            out.push_back({i, j, e});
        }
    }
    return out;
}

// ---- text format ----
//   basis (t1) (t2)
//   T (v1) (v2) (v3)
//   S (v1) (v2) (v3) (v4)
// '#' starts a comment.

namespace detail {
inline std::vector<std::string> paren_groups(const std::string& line, std::size_t from, int lineno) {
    std::vector<std::string> out;
    std::size_t i = from;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') { ++i; continue; }
        if (line[i] != '(') throw std::invalid_argument("line " + std::to_string(lineno) + ": expected '('");
        auto close = line.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing ')'");
        out.push_back(line.substr(i + 1, close - i - 1));
        i = close + 1;
    }
    return out;
}
}  // namespace detail

struct ParsedTiles {
    std::optional<std::pair<CycInt, CycInt>> basis;
    std::vector<Tile> tiles;  // as written, not reduced
};

inline ParsedTiles parse_tiles(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    ParsedTiles out;
    auto integral = [&](const std::string& s) {
        CycNum z = parse_cyc(s);
        if (!z.is_integral())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": non-integral coordinate " + z.str());
        return to_int(z);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        if (line.compare(b, 5, "basis") == 0) {
            auto g = detail::paren_groups(line, b + 5, lineno);
            if (g.size() != 2) throw std::invalid_argument("line " + std::to_string(lineno) + ": basis needs two vectors");
            out.basis = {integral(g[0]), integral(g[1])};
        } else if (line[b] == 'T' || line[b] == 'S') {
            TileKind k = line[b] == 'T' ? TileKind::Triangle : TileKind::Square;
            auto g = detail::paren_groups(line, b + 1, lineno);
            if (g.size() != corner_count(k))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": wrong number of vertices");
            Tile t{k, {}};
            for (auto& s : g) t.vertices.push_back(integral(s));
            out.tiles.push_back(std::move(t));
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unrecognised line");
        }
    }
    return out;
}

inline PeriodicTiling parse_tiling(const std::string& text) {
    ParsedTiles p = parse_tiles(text);
    if (!p.basis) throw std::invalid_argument("missing basis line");
    return PeriodicTiling(p.basis->first, p.basis->second, std::move(p.tiles));
}

inline std::string format_tiling(const PeriodicTiling& t) {
    std::ostringstream os;
    os << "basis (" << t.t1().str() << ") (" << t.t2().str() << ")\n";
    for (auto& tile : t.tiles()) {
        os << kind_letter(tile.kind);
        for (auto& v : tile.vertices) os << " (" << v.str() << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace mixplat
