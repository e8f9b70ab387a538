#include <mixplat/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mixplat;
using report::Json;

enum Exit { Ok = 0, CheckFailed = 1, Usage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// YAML-like rendering for people
void print_text(std::ostream& os, const Json& j, int depth = 0) {
    std::string pad(2 * depth, ' ');
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                os << pad << k << ":\n";
                print_text(os, v, depth + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (auto& v : j) {
            if (v.is_object()) {
                bool first = true;
                for (auto& [k, x] : v.items()) {
                    os << pad << (first ? "- " : "  ") << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
                    first = false;
                }
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

struct Output {
    bool structured = false;
    void emit(const Json& j) const {
        if (structured) std::cout << j.dump(2) << "\n";
        else print_text(std::cout, j);
    }
};

// FILE or builtin:NAME
PeriodicTiling load_tiling(const std::string& src) {
    if (src.rfind("builtin:", 0) == 0) return builtin_tiling(src.substr(8));
    std::ifstream in(src);
    if (!in) throw UsageError("cannot read '" + src + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_tiling(ss.str());
}

SqrtThreeRat parse_real(const std::string& s) {
    try {
        return parse_sqrt3(s);
    } catch (const std::exception& e) {
        throw UsageError("cannot parse '" + s + "' as a + b*r3: " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for mixed triangle/square tilings and their cusp geometry"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    int code = Ok;
    std::function<void()> action;
    Output out;

    // units
    auto* units = app.add_subcommand("units", "unit classes of Z[z12] with lo < |u|^2 <= hi");
    std::string umin = "1", umax = "36";
    units->add_option("--min", umin, "lower bound on |u|^2 (exclusive)");
    units->add_option("--max", umax, "upper bound on |u|^2 (inclusive)");
    units->callback([&] {
        action = [&] {
            SqrtThreeRat lo = parse_real(umin), hi = parse_real(umax);
            try {
                out.emit(report::units(enumerate_unit_classes(lo, hi)));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        };
    });

    // tiling
    auto* tiling = app.add_subcommand("tiling", "periodic tilings");
    tiling->require_subcommand(1);
    std::string tfile;
    auto* tval = tiling->add_subcommand("validate", "check a tiling file");
    tval->add_option("FILE", tfile, "tiling file or builtin:NAME")->required();
    tval->callback([&] {
        action = [&] {
            auto r = validate(load_tiling(tfile));
            out.emit(report::validation(r));
            if (!r.ok) code = CheckFailed;
        };
    });
    auto* ttypes = tiling->add_subcommand("types", "triangle-type census and constraint check");
    ttypes->add_option("FILE", tfile, "tiling file or builtin:NAME")->required();
    ttypes->callback([&] {
        action = [&] {
            auto t = load_tiling(tfile);
            auto v = validate(t);
            if (!v.ok) { out.emit(report::validation(v)); code = CheckFailed; return; }
            out.emit(report::types(t));
            if (!check_type_constraints(t).pass) code = CheckFailed;
        };
    });
    auto* tsym = tiling->add_subcommand("symmetry", "orientation-preserving symmetry group");
    tsym->add_option("FILE", tfile, "tiling file or builtin:NAME")->required();
    tsym->callback([&] { action = [&] { out.emit(report::symmetry(symmetry_group(load_tiling(tfile)))); }; });
    auto* trender = tiling->add_subcommand("render", "SVG of a tiling or of its dual");
    trender->add_option("FILE", tfile, "tiling file or builtin:NAME")->required();
    bool colour_types = false, render_dual = false;
    int periods = 1;
    std::string svg_out;
    trender->add_flag("--types", colour_types, "fill triangles by type");
    trender->add_flag("--dual", render_dual, "draw the dual tessellation");
    trender->add_option("--periods", periods, "translates in each direction")->check(CLI::Range(0, 4));
    trender->add_option("-o,--output", svg_out, "write to a file instead of stdout");
    trender->callback([&] {
        action = [&] {
            auto t = load_tiling(tfile);
            SvgOptions o;
            o.type_colours = colour_types;
            o.periods = periods;
            std::string svg = render_dual ? render_dual_svg(t, periods) : render_tiling_svg(t, o);
            if (svg_out.empty()) { std::cout << svg; return; }
            std::ofstream f(svg_out, std::ios::binary);
            if (!f) throw UsageError("cannot write '" + svg_out + "'");
            f << svg;
        };
    });
    auto* tbuiltin = tiling->add_subcommand("builtin", "print a built-in tiling in file format");
    std::string bname;
    tbuiltin->add_option("NAME", bname, "Q, R, E, snub, square, triangle, six-two")->required();
    tbuiltin->callback([&] {
        action = [&] {
            try {
                std::cout << format_tiling(builtin_tiling(bname));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        };
    });

    // classify
    auto* cls = app.add_subcommand("classify", "square-carrier classification and counting obstructions");
    cls->require_subcommand(1);
    std::string cfile;
    auto* criscs = cls->add_subcommand("riscs", "rotation-invariant square carriers of a tiling");
    criscs->add_option("FILE", cfile, "tiling file or builtin:NAME")->required();
    criscs->callback([&] {
        action = [&] {
            auto t = load_tiling(cfile);
            RiscSearch r;
            try {
                r = find_riscs(t);
            } catch (const std::invalid_argument& e) {
                // a valid tiling without the needed rotation is a failed check, not bad usage
                r.ok = false;
                r.failure = e.what();
            }
            out.emit(report::riscs(r));
            if (!r.ok) code = CheckFailed;
        };
    });
    auto* cpairs = cls->add_subcommand("pairs", "pairs of carriers with close centres");
    std::string pthreshold;
    cpairs->add_option("--threshold", pthreshold, "squared centre distance bound (default (2+1/sqrt3)^2)");
    cpairs->callback([&] {
        action = [&] { out.emit(report::pairs(enumerate_risc_pairs(pthreshold.empty() ? ell_sq() : parse_real(pthreshold)))); };
    });
    auto* cthree = cls->add_subcommand("three-tilings", "tilings with an order-3 rotation and short translations");
    cthree->callback([&] {
        action = [&] {
            auto c = classify_short_translation_tilings();
            out.emit(report::classification(c));
            if (!c.failures.empty()) code = CheckFailed;
        };
    });
    auto* cnoace = cls->add_subcommand("noace", "solve the tetrahedron type counts for D squares");
    long noace_d = 0;
    cnoace->add_option("D", noace_d, "number of squares")->required()->check(CLI::PositiveNumber);
    cnoace->callback([&] {
        action = [&] {
            auto r = noace_count_solver(noace_d);
            out.emit(report::noace(r));
            if (!r.feasible) code = CheckFailed;
        };
    });
    auto* carea = cls->add_subcommand("area", "area obstruction for a squared translation length");
    std::string area_ell;
    carea->add_option("ELLSQ", area_ell, "squared length, a + b*r3")->required();
    carea->callback([&] {
        action = [&] {
            SqrtThreeRat e = parse_real(area_ell);
            if (e.sign() <= 0) throw UsageError("squared length must be positive");
            auto r = area_obstruction(e);
            out.emit(report::area(r));
            if (r.solutions.empty()) code = CheckFailed;
        };
    });
    auto* caudit = cls->add_subcommand("audit", "exact comparison of two numbers in Q(sqrt3)");
    std::string lhs, rhs;
    caudit->add_option("LHS", lhs)->required();
    caudit->add_option("RHS", rhs)->required();
    caudit->callback([&] { action = [&] { out.emit(report::audit(audit_inequality(parse_real(lhs), parse_real(rhs)))); }; });
    auto* clocal = cls->add_subcommand("local", "local search between a square and its nearest order-3 centre");
    std::string local_radius = "16";
    clocal->add_option("--radius-sq", local_radius, "growth bound around the square");
    clocal->callback([&] {
        action = [&] {
            auto r = local_patch_search(parse_real(local_radius));
            if (r.refused) {
                out.emit(Json{{"refused", true}, {"reason", r.refusal}});
                code = CheckFailed;
                return;
            }
            Json cs = Json::array();
            for (auto& c : r.classes) {
                std::string kinds;
                for (auto& t : c.tiles) kinds.push_back(kind_letter(t.kind));
                cs.push_back({{"tiles", kinds}, {"completions", c.completions}, {"forbidden", c.forbidden}});
            }
            out.emit(Json{{"candidates", r.candidates}, {"admissible", r.admissible}, {"completions", r.completions},
                          {"classes", cs}, {"forbidden_seen", r.forbidden_seen}});
        };
    });
    auto* cslop = cls->add_subcommand("slop", "orbit-merging check on E for the full group or its p3 subgroup");
    std::string slop_group;
    cslop->add_option("GROUP", slop_group, "p6 or p3")->required()->check(CLI::IsMember({"p6", "p3"}));
    cslop->callback([&] {
        action = [&] {
            auto r = slop_case_check(slop_group);
            out.emit(report::slop(r));
            if (!r.all_contradict) code = CheckFailed;
        };
    });
    auto* corbits = cls->add_subcommand("orbits", "half-edge orbits of the dual tessellation");
    int orbit_order = 0;
    corbits->add_option("FILE", cfile, "tiling file or builtin:NAME")->required();
    corbits->add_option("--rotation-order", orbit_order, "restrict to rotations of this order (2, 3, 4, 6)");
    corbits->callback([&] {
        action = [&] {
            auto t = load_tiling(cfile);
            auto g = symmetry_group(t);
            if (orbit_order) g = rotation_subgroup(g, orbit_order);
            out.emit(report::orbits(halfedge_orbit_analysis(t, g)));
        };
    });

    // voronoi
    auto* vor = app.add_subcommand("voronoi", "horoball Voronoi cells and the planar dual");
    vor->require_subcommand(1);
    std::string vfile, vkind;
    auto* vdual = vor->add_subcommand("dual", "dual tessellation with face types");
    vdual->add_option("FILE", vfile, "tiling file or builtin:NAME")->required();
    vdual->callback([&] {
        action = [&] {
            auto t = load_tiling(vfile);
            auto j = report::dual(t);
            out.emit(j);
            if (!j["area_matches"].get<bool>() || !j["duality_verified"].get<bool>()) code = CheckFailed;
        };
    });
    auto* vcell = vor->add_subcommand("cell", "cell of the horoball at infinity");
    vcell->add_option("KIND", vkind, "tet or oct")->required()->check(CLI::IsMember({"tet", "oct"}));
    vcell->callback([&] {
        action = [&] {
            auto p = standard_polyhedron(vkind == "tet" ? PolyhedronKind::Tetrahedron : PolyhedronKind::Octahedron);
            out.emit(report::cell(voronoi_cell(p, IdealPoint::infinity())));
        };
    });

    // volume
    auto* vol = app.add_subcommand("volume", "volumes as combinations of the regular ideal tetrahedron and octahedron");
    vol->require_subcommand(1);
    std::string vlo, vhi, csv;
    auto* vdec = vol->add_subcommand("decompose", "all n1 v_tet + n2 v_oct meeting [LO, HI]");
    vdec->add_option("LO", vlo)->required();
    vdec->add_option("HI", vhi)->required();
    vdec->callback([&] {
        action = [&] {
            RealInterval V(128);
            try {
                V = RealInterval::from_strings(vlo, vhi, 128);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            try {
                out.emit(report::decomposition(decompose_volume(V)));
            } catch (const VolumeRefusal& e) {
                out.emit(Json{{"refused", true}, {"reason", e.what()}});
                code = CheckFailed;
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        };
    });
    auto* vscan = vol->add_subcommand("scan", "decompose every row of a CSV volume table");
    vscan->add_option("CSV", csv)->required();
    vscan->callback([&] {
        action = [&] {
            std::ifstream in(csv);
            if (!in) throw UsageError("cannot read '" + csv + "'");
            out.emit(report::volume_table(scan_volume_table(in)));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }
    out.structured = format == "structured";
    try {
        if (action) action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return CheckFailed;
    }
    return code;
}
