#pragma once

#include "tiling.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace mixplat {

// Closed convex tiles: do their interiors meet?  Separating-axis test on edge normals.
inline bool interiors_overlap(const Tile& a, const Tile& b) {
    std::set<int> axes;
    for (const Tile* t : {&a, &b})
        for (std::size_t j = 0; j < t->size(); ++j) axes.insert(mod12(t->edge_dir(j) + 3) % 6);
    for (int m : axes) {
        auto range = [m](const Tile& t) {
            SqrtThreeInt lo = project2(t.vertices[0], m), hi = lo;
            for (auto& v : t.vertices) {
                SqrtThreeInt p = project2(v, m);
                if (p < lo) lo = p;
                if (hi < p) hi = p;
            }
            return std::pair{lo, hi};
        };
        auto [alo, ahi] = range(a);
        auto [blo, bhi] = range(b);
        if (ahi <= blo || bhi <= alo) return false;
    }
    return true;
}

// p in the open segment (a, b), |b - a| = 1
inline bool inside_unit_segment(const CycInt& p, const CycInt& a, const CycInt& b) {
    CycInt d = b - a, w = p - a;
    if (cross_sign(d, w) != 0) return false;
    SqrtThreeInt t = dot4(w, d);
    return t.sign() > 0 && t < SqrtThreeInt(4);
}

// Two distinct tiles can sit in one edge-to-edge tiling.
inline bool tiles_compatible(const Tile& a, const Tile& b) {
    if (interiors_overlap(a, b)) return false;
    for (const auto& [x, y] : {std::pair{&a, &b}, std::pair{&b, &a}})
        for (auto& p : x->vertices)
            for (std::size_t j = 0; j < y->size(); ++j)
                if (inside_unit_segment(p, y->vertex(j), y->vertex(j + 1))) return false;
    return true;
}

// Growing edge-to-edge patch, optionally modulo a lattice.  Every accepted tile keeps the patch
// free of overlaps, T-junctions and unfillable 30 degree gaps.
class PatchBuilder {
public:
    PatchBuilder() = default;
    explicit PatchBuilder(LatticeFrame frame) : frame_(std::move(frame)) {}

    const std::vector<Tile>& tiles() const { return tiles_; }
    const std::optional<LatticeFrame>& frame() const { return frame_; }

    Tile reduce(const Tile& t) const {
        Tile n = t.normalised();
        if (!frame_) return n;
        CycInt v = n.vertices[0];
        return n.translated(frame_->reduce(v) - v);
    }
    bool has(const Tile& t) const { return keys_.count(reduce(t).key()) > 0; }

    bool compatible(const Tile& t) const {
        if (!t.well_formed()) return false;
        if (has(t)) return true;
        Tile r = reduce(t);
        // sectors at each vertex
        std::map<std::array<std::int64_t, 4>, std::uint16_t> trial;
        for (std::size_t j = 0; j < r.size(); ++j) {
            CycInt v = point_key(r.vertex(j));
            std::uint16_t m = sector_bits(r, j);
            auto [it, fresh] = trial.emplace(v.coeffs(), mask_at(v));
            if (it->second & m) return false;
            it->second |= m;
        }
        for (auto& [k, m] : trial)
            if (has_thin_gap(m)) return false;
        // nearby tiles, including lattice translates
        double cx = r.centre6().re_approx() / 6, cy = r.centre6().im_approx() / 6;
        for (auto& other : tiles_) {
            for (auto& s : shifts()) {
                double ox = other.centre6().re_approx() / 6 + s.second.first - cx;
                double oy = other.centre6().im_approx() / 6 + s.second.second - cy;
                if (ox * ox + oy * oy > 2.1) continue;
                Tile o = s.first.is_zero() ? other : other.translated(s.first);
                if (o.key() == r.key()) return false;  // a translate of itself: lattice too fine
                if (!tiles_compatible(r, o)) return false;
            }
        }
        return true;
    }

    // false leaves the builder unchanged
    bool add(const Tile& t) {
        if (has(t)) return true;
        if (!compatible(t)) return false;
        Tile r = reduce(t);
        for (std::size_t j = 0; j < r.size(); ++j) {
            CycInt v = point_key(r.vertex(j));
            masks_[v.coeffs()] |= sector_bits(r, j);
            edges_.insert({point_key(r.vertex(j)).coeffs(), r.edge_dir(j)});
        }
        keys_.insert(r.key());
        tiles_.push_back(std::move(r));
        return true;
    }

    // Directed edges with a tile on the left only, least first; the filter sees the actual edge.
    std::optional<std::pair<CycInt, int>> open_edge(
        const std::function<bool(const CycInt&, const CycInt&)>& wanted = nullptr) const {
        for (auto& [key, dir] : edges_) {
            CycInt a{key};
            CycInt b = a + unit_directions()[dir];
            if (edges_.count({point_key(b).coeffs(), mod12(dir + 6)})) continue;
            if (!wanted || wanted(a, b)) return std::pair{a, dir};
        }
        return std::nullopt;
    }
    // corners filled at a vertex, in 30 degree steps
    int filled_steps(const CycInt& v) const { return __builtin_popcount(mask_at(point_key(v))); }
    bool closed_at(const CycInt& v) const { return mask_at(point_key(v)) == 0xFFF; }

    SqrtThreeRat area() const {
        long s = 0, tr = 0;
        for (auto& t : tiles_) (t.kind == TileKind::Square ? s : tr)++;
        return {Rational(s), Rational(tr) / 4};
    }

private:
    CycInt point_key(const CycInt& v) const { return frame_ ? frame_->reduce(v) : v; }
    std::uint16_t mask_at(const CycInt& v) const {
        auto it = masks_.find(v.coeffs());
        return it == masks_.end() ? 0 : it->second;
    }
    static std::uint16_t sector_bits(const Tile& t, std::size_t j) {
        int k = t.edge_dir(j);
        std::uint16_t m = 0;
        for (int s = 0; s < interior_steps(t.kind); ++s) m |= std::uint16_t(1u << mod12(k + s));
        return m;
    }
    // a free run of exactly one step can never be filled
    static bool has_thin_gap(std::uint16_t m) {
        if (m == 0 || m == 0xFFF) return false;
        for (int k = 0; k < 12; ++k) {
            bool free_k = !(m >> k & 1);
            bool left = m >> mod12(k - 1) & 1, right = m >> mod12(k + 1) & 1;
            if (free_k && left && right) return true;
        }
        return false;
    }
    // translates to test against, with approximate offsets
    const std::vector<std::pair<CycInt, std::pair<double, double>>>& shifts() const {
        if (shift_cache_.empty()) {
            if (!frame_) {
                shift_cache_.push_back({CycInt(), {0.0, 0.0}});
            } else {
                for (int i = -2; i <= 2; ++i)
                    for (int j = -2; j <= 2; ++j) {
                        CycInt s = frame_->at(i, j);
                        shift_cache_.push_back({s, {s.re_approx(), s.im_approx()}});
                    }
            }
        }
        return shift_cache_;
    }

    std::optional<LatticeFrame> frame_;
    std::vector<Tile> tiles_;
    std::set<TileKey> keys_;
    std::map<std::array<std::int64_t, 4>, std::uint16_t> masks_;
    std::set<std::pair<std::array<std::int64_t, 4>, int>> edges_;
    mutable std::vector<std::pair<CycInt, std::pair<double, double>>> shift_cache_;
};

// Rotation by z^k about the point c6/6; nullopt when the translation part is not integral.
inline std::optional<PlanarIsometry> rotation_about(const CycInt& c6, int k) {
    CycInt t6 = c6 - c6.mul_zeta_pow(k);
    for (int j = 0; j < 4; ++j)
        if (t6[j] % 6 != 0) return std::nullopt;
    return PlanarIsometry{mod12(k), false, CycInt(t6[0] / 6, t6[1] / 6, t6[2] / 6, t6[3] / 6)};
}

struct CompletionResult {
    std::vector<PeriodicTiling> tilings;  // distinct completions
    std::size_t nodes = 0;                // search nodes visited
    std::string failure;                  // why the seed itself was rejected, if it was
};

// All periodic tilings containing `seed` that are invariant under the order-3 rotations about
// p6/6 and q6/6.  The lattice is generated by v = (1 - w)(p - q) and w v with w = z^4.
inline CompletionResult complete_symmetric(const std::vector<Tile>& seed, const CycInt& p6, const CycInt& q6,
                                           std::size_t node_limit = 1000000) {
    CompletionResult res;
    CycInt v6 = (p6 - q6) - (p6 - q6).mul_zeta_pow(4);
    for (int j = 0; j < 4; ++j)
        if (v6[j] % 6 != 0) {
            res.failure = "rotation centres do not generate an integral lattice";
            return res;
        }
    CycInt v(v6[0] / 6, v6[1] / 6, v6[2] / 6, v6[3] / 6);
    CycInt w = v.mul_zeta_pow(4);
    auto rho = rotation_about(p6, 4);
    if (!rho || v.is_zero()) {
        res.failure = "rotation centre is not admissible";
        return res;
    }
    LatticeFrame frame(v, w);
    SqrtThreeRat cov = frame.covolume();
    PlanarIsometry rho2 = rho->compose(*rho);

    auto add_orbit = [&](PatchBuilder& b, const Tile& t) {
        return b.add(t) && b.add(rho->apply(t)) && b.add(rho2.apply(t));
    };
    PatchBuilder start(frame);
    for (auto& t : seed)
        if (!add_orbit(start, t)) {
            res.failure = "seed tiles are not compatible with the rotation group";
            return res;
        }
    std::set<std::vector<TileKey>> seen;
    std::function<void(const PatchBuilder&)> dfs = [&](const PatchBuilder& b) {
        if (++res.nodes > node_limit) throw std::runtime_error("completion search exceeded its node limit");
        if (cov < b.area()) return;
        auto e = b.open_edge();
        if (!e) {
            if (b.area() != cov) return;
            std::vector<TileKey> ks;
            for (auto& t : b.tiles()) ks.push_back(t.key());
            std::sort(ks.begin(), ks.end());
            if (seen.insert(ks).second) res.tilings.emplace_back(v, w, b.tiles());
            return;
        }
        CycInt a = e->first, end = a + unit_directions()[e->second];
        for (TileKind kind : {TileKind::Triangle, TileKind::Square}) {
            Tile t = Tile::make(kind, end, e->second + 6);
            PatchBuilder next = b;
            if (add_orbit(next, t)) dfs(next);
        }
    };
    dfs(start);
    return res;
}

}  // namespace mixplat
