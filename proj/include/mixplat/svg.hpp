#pragma once

#include "hyperbolic.hpp"
#include "symmetry.hpp"
#include "tiling.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

namespace mixplat {

namespace detail {

// floor of an element of Q(sqrt3), exactly
inline mpz_class floor_sqrt3(const SqrtThreeRat& x) {
    mpz_class n(std::floor(x.approx()));
    auto above = [&](const mpz_class& k) { return (x - SqrtThreeRat(Rational(k))).sign() >= 0; };
    while (!above(n)) --n;
    while (above(n + 1)) ++n;
    return n;
}

}  // namespace detail

// Fixed 12-digit decimal, round half to even, computed from the exact value.
inline std::string decimal12(const SqrtThreeRat& x) {
    static const mpz_class scale = [] {
        mpz_class s;
        mpz_ui_pow_ui(s.get_mpz_t(), 10, 12);
        return s;
    }();
    SqrtThreeRat scaled = x * SqrtThreeRat(Rational(scale));
    mpz_class n = detail::floor_sqrt3(scaled);
    int c = (scaled - SqrtThreeRat(Rational(n)) - SqrtThreeRat(Rational(1, 2))).sign();
    if (c > 0 || (c == 0 && mpz_odd_p(n.get_mpz_t()))) n += 1;
    bool neg = n < 0;
    mpz_class a = abs(n);
    std::string digits = a.get_str();
    if (digits.size() < 13) digits.insert(0, 13 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - 12) + "." + digits.substr(digits.size() - 12);
    return (neg ? "-" : "") + out;
}

struct SvgOptions {
    bool type_colours = false;
    bool fundamental_domain = true;
    bool rotation_centres = true;
    int periods = 1;      // translates drawn in each direction
    long pixels_per_unit = 40;
};

namespace detail {

struct SvgCanvas {
    long ppu;
    std::ostringstream body;
    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;

    // x right, y down
    std::pair<std::string, std::string> xy(const CycNum& z) {
        SqrtThreeRat s{Rational(ppu)};
        SqrtThreeRat x = re(z) * s, y = -(im(z) * s);
        minx = std::min(minx, x.approx());
        maxx = std::max(maxx, x.approx());
        miny = std::min(miny, y.approx());
        maxy = std::max(maxy, y.approx());
        return {decimal12(x), decimal12(y)};
    }
    void polygon(const std::vector<CycNum>& pts, const std::string& cls, const std::string& fill,
                 const std::string& stroke = "#333333", const std::string& extra = "") {
        body << "  <polygon class=\"" << cls << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"" << extra << " points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k) {
            auto [x, y] = xy(pts[k]);
            body << (k ? " " : "") << x << "," << y;
        }
        body << "\"/>\n";
    }
    void circle(const CycNum& c, int r, const std::string& cls, const std::string& fill) {
        auto [x, y] = xy(c);
        body << "  <circle class=\"" << cls << "\" cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" fill=\"" << fill
             << "\"/>\n";
    }
    std::string finish() const {
        std::ostringstream os;
        long x0 = static_cast<long>(std::floor(minx)) - 10, y0 = static_cast<long>(std::floor(miny)) - 10;
        long w = static_cast<long>(std::ceil(maxx)) + 10 - x0, h = static_cast<long>(std::ceil(maxy)) + 10 - y0;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << x0 << " " << y0 << " " << w << " " << h
           << "\" width=\"" << w << "\" height=\"" << h << "\">\n"
           << body.str() << "</svg>\n";
        return os.str();
    }
};

inline const char* type_fill(TriangleType t) {
    switch (t) {
        case TriangleType::TTT: return "#eef6e2";
        case TriangleType::OTT: return "#9cc97a";
        case TriangleType::OOT: return "#4a9f8c";
        default: return "#2f5f8a";
    }
}

inline const char* face_fill(const std::string& type) {
    if (type == "TTTTTT") return "#f2d0a4";
    if (type == "OTOTT") return "#b5d6e8";
    if (type == "OOTTT") return "#c9b6e4";
    if (type == "OOOO") return "#e8e1a0";
    return "#dddddd";
}

inline CycNum scaled6(const CycInt& p6) { return to_rat(p6) * Rational(1, 6); }

}  // namespace detail

inline std::string render_tiling_svg(const PeriodicTiling& t, const SvgOptions& opt = {}) {
    TilingIndex ix(t);
    ix.require_ok();
    detail::SvgCanvas cv{opt.pixels_per_unit};
    std::vector<TriangleType> types;
    if (opt.type_colours)
        for (auto& tile : t.tiles())
            types.push_back(tile.kind == TileKind::Triangle ? triangle_type(t, tile) : TriangleType::TTT);
    for (int i = -opt.periods; i <= opt.periods; ++i)
        for (int j = -opt.periods; j <= opt.periods; ++j) {
            CycInt s = t.frame().at(i, j);
            for (std::size_t k = 0; k < t.tiles().size(); ++k) {
                const Tile& tile = t.tiles()[k];
                std::vector<CycNum> pts;
                for (auto& v : tile.vertices) pts.push_back(to_rat(v + s));
                if (tile.kind == TileKind::Square) {
                    cv.polygon(pts, "square", "#f4a261");
                } else if (opt.type_colours) {
                    cv.polygon(pts, "triangle " + to_string(types[k]), detail::type_fill(types[k]));
                } else {
                    cv.polygon(pts, "triangle", "#8ecae6");
                }
            }
        }
    if (opt.fundamental_domain) {
        CycInt a = t.t1(), b = t.t2();
        cv.polygon({CycNum(), to_rat(a), to_rat(a + b), to_rat(b)}, "domain", "none", "#d00000",
                   " stroke-width=\"2\" stroke-dasharray=\"6,4\"");
    }
    if (opt.rotation_centres) {
        SymmetryGroup g = symmetry_group(t);
        for (auto& c : g.centres) {
            const char* fill = c.order == 6 ? "#6a040f" : c.order == 4 ? "#3a0ca3" : c.order == 3 ? "#d00000" : "#111111";
            cv.circle(c.centre(), 2 + c.order, "centre order" + std::to_string(c.order), fill);
        }
    }
    return cv.finish();
}

inline std::string render_dual_svg(const PeriodicTiling& t, int periods = 1, long ppu = 40) {
    DualTessellation d = dual_tessellation(t);
    detail::SvgCanvas cv{ppu};
    for (int i = -periods; i <= periods; ++i)
        for (int j = -periods; j <= periods; ++j) {
            CycInt s6 = t.frame().at(i, j) * std::int64_t(6);
            for (auto& f : d.faces) {
                std::vector<CycNum> pts;
                for (auto& c : f.centres6) pts.push_back(detail::scaled6(c + s6));
                cv.polygon(pts, "face " + f.type, detail::face_fill(f.type));
            }
        }
    return cv.finish();
}

}  // namespace mixplat
