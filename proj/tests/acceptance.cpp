// Acceptance run: one PASS/FAIL line per criterion.  Exit status is nonzero if any criterion fails,
// except those listed as unattainable (they still print FAIL).

#include <mixplat/mixplat.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace mixplat;

namespace {

SqrtThreeRat sq3(const Rational& a, const Rational& b = 0) { return {a, b}; }

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> check;
    std::string unattainable;  // why the criterion cannot hold as written, empty if it can
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome unit_enumeration() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto cs = enumerate_unit_classes(sq3(1), sq3(36));
    double s = seconds_since(t0);
    o.require(cs.size() == 2, "exactly two classes");
    if (cs.size() == 2) {
        o.require(cs[0].modulus_sq == sq3(2, 1), "first modulus^2 is 2+r3");
        o.require(cs[1].modulus_sq == sq3(7, 4), "second modulus^2 is 7+4r3");
    }
    o.require(s < 1.0, "runtime under 1s");
    o.note("classes=" + std::to_string(cs.size()) + " time=" + std::to_string(s) + "s");
    return o;
}

Outcome meridian() {
    Outcome o;
    CycNum m = (CycNum(Rational(-1)) + CycNum::imag_unit() * (CycNum::sqrt3() + CycNum(Rational(2)))) * Rational(1, 2);
    o.require(m.norm_sq() == sq3(2, 1), "norm_sq = 2+r3");
    o.note("norm_sq=" + m.norm_sq().str());
    return o;
}

Outcome type_obstructions() {
    Outcome o;
    auto q = check_type_constraints(make_Q());
    o.require(!q.pass && q.witness == "OTT present, no OOT/TTT", "Q fails with the OTT witness");
    auto s = check_type_constraints(make_snub_square());
    o.require(!s.pass && s.witness == "OOT present, no OOO/OTT", "right non-example fails with the OOT witness");
    o.require(check_type_constraints(make_R()).pass, "R passes");
    o.require(check_type_constraints(make_E()).pass, "E passes");
    return o;
}

Outcome no_ace() {
    Outcome o;
    auto r = noace_count_solver(12);
    o.require(r.feasible && r.a == 1 && r.b == 6 && r.c == 0, "d=12 gives (1,6,0)");
    for (std::int64_t d = 1; d <= 120; ++d)
        if (noace_count_solver(d).feasible != (d % 12 == 0)) o.require(false, "feasibility iff 12 | d at d=" + std::to_string(d));
    o.require(find_pattern(make_R(), "OOT-OOT").empty(), "no OOT pair across a T-edge in R");
    return o;
}

Outcome classification() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto ps = enumerate_risc_pairs(ell_sq());
    o.require(ps.size() == 3, "three carrier pair configurations");
    SqrtThreeRat near{Rational(4, 3), Rational(2, 3)}, far{Rational(7, 3), Rational(4, 3)};
    if (ps.size() == 3)
        o.require(ps[0].centre_dist_sq == near && ps[1].centre_dist_sq == far && ps[2].centre_dist_sq == far,
                  "centre distances^2 (1+1/r3)^2, (1+2/r3)^2, (1+2/r3)^2");
    auto c = classify_short_translation_tilings();
    std::vector<PeriodicTiling> want{make_Q(), make_E(), make_R()};
    std::vector<SqrtThreeRat> mins{sq3(4, 2), sq3(7, 4), sq3(7, 4)};
    o.require(c.tilings.size() == 3 && c.failures.empty(), "three tilings, no failures");
    for (std::size_t k = 0; k < std::min<std::size_t>(3, c.tilings.size()); ++k) {
        o.require(canonical_form(c.tilings[k].tiling) == canonical_form(want[k]), "tiling " + std::to_string(k) + " is canonically Q/E/R");
        o.require(min_translation_sq(c.tilings[k].tiling) == mins[k], "min translation^2 of tiling " + std::to_string(k));
    }
    double s = seconds_since(t0);
    o.require(s < 60.0, "runtime under 60s");
    o.note("time=" + std::to_string(s) + "s");
    return o;
}

const CycNum& stated_tet_apex() {
    static const CycNum z = (CycNum(Rational(3)) + CycNum::imag_unit() * CycNum::sqrt3()) * Rational(1, 4);
    return z;
}

Outcome voronoi_geometry() {
    Outcome o;
    auto tet = voronoi_cell(standard_polyhedron(PolyhedronKind::Tetrahedron), IdealPoint::infinity());
    auto oct = voronoi_cell(standard_polyhedron(PolyhedronKind::Octahedron), IdealPoint::infinity());
    o.require(tet.apex.height_sq == sq3(Rational(2, 3)), "tetrahedral apex height^2 2/3");
    o.require(oct.apex.z == half_one_plus_i() && oct.apex.height_sq == sq3(Rational(1, 2)), "octahedral apex ((1+i)/2, 1/2)");
    bool angles = true;
    for (auto* c : {&tet, &oct})
        for (auto& x : c->dihedral_cos) angles = angles && x == sq3(Rational(-1, 2));
    o.require(angles && tet.dihedral_cos.size() == 3 && oct.dihedral_cos.size() == 4, "all cell angles 2pi/3");
    o.require(tet.avoids_far_faces && oct.avoids_far_faces, "cells miss the far faces");
    CycNum derived = (CycNum(Rational(3)) + CycNum::imag_unit() * CycNum::sqrt3()) * Rational(1, 6);
    o.require(tet.apex.z == derived, "tetrahedral apex is the cusp-triangle centroid (3+i r3)/6");
    // the stated point is not where the three bisectors meet
    bool stated = tet.apex.z == stated_tet_apex();
    o.require(stated, "tetrahedral apex equals the stated (3+i r3)/4");
    SqrtThreeRat r2 = stated_tet_apex().norm_sq();
    o.note("computed apex " + tet.apex.z.str() + "; stated point has |z|^2 = " + r2.str() +
           ", so it sits at height^2 " + (sq3(1) - r2).str() + " on the unit hemisphere, not 2/3");
    return o;
}

Outcome dual_orbits() {
    Outcome o;
    auto E = make_E();
    auto full = symmetry_group(E);
    auto r6 = halfedge_orbit_analysis(E, full);
    o.require(r6.pentagon_orbits == 2 && r6.hexagon_orbits == 1 && r6.long_orbits == 8, "p6: 2 pentagon, 1 hexagon, 8 long orbits");
    auto r3 = halfedge_orbit_analysis(E, rotation_subgroup(full, 3));
    o.require(r3.pentagon_orbits == 4, "p3: 4 pentagon orbits");
    auto allowed = allowed_identification_counts();
    for (auto g : {"p6", "p3"}) {
        auto s = slop_case_check(g);
        std::ostringstream os;
        os << g << ":";
        bool ok = s.all_contradict;
        for (auto& c : s.cases) {
            if (c.excluded) continue;
            os << " " << c.max_merged;
            for (auto m : c.merged) ok = ok && !allowed.count(static_cast<int>(m));
        }
        o.require(ok, std::string(g) + " merged counts avoid {1,3}");
        o.note(os.str());
    }
    return o;
}

Outcome valence_six() {
    Outcome o;
    o.require(min_valence6_distance_sq(make_E()) == sq3(7, 4), "7+4r3");
    return o;
}

Outcome area() {
    Outcome o;
    auto a = area_obstruction(sq3(2, 1));
    o.require(a.solutions.empty(), "no (triangles, squares) solution");
    o.require(a.area == sq3(Rational(3, 2), 1), "area r3 + 3/2");
    o.note("area=" + a.area.str() + "; " + a.reason);
    return o;
}

Outcome volume_solver() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    const RealInterval& t = v_tet();
    const RealInterval& v = v_oct();
    auto centred = [&](long n1, long n2) {
        RealInterval c = RealInterval(Rational(n1), 128) * t + RealInterval(Rational(n2), 128) * v;
        return c - RealInterval(5e-10, 128) + RealInterval(0.0, 1e-9, 128);
    };
    for (auto [n1, n2] : {std::pair{2L, 1L}, std::pair{6L, 2L}}) {
        RealInterval V = centred(n1, n2);
        o.require(V.width() <= 1e-9 * 1.0001, "input width at most 1e-9");
        auto s = decompose_volume(V);
        o.require(s.size() == 1 && s[0].n1 == n1 && s[0].n2 == n2,
                  "unique solution (" + std::to_string(n1) + "," + std::to_string(n2) + ")");
    }
    o.require(t.width() <= 1e-9 && v.width() <= 1e-9, "constant widths at most 1e-9");
    double s = seconds_since(t0);
    o.require(s < 1.0, "runtime under 1s");
    o.note("time=" + std::to_string(s) + "s");
    return o;
}

Outcome inequality_audit() {
    Outcome o;
    SqrtThreeRat r3{0, 1};
    auto q = [](long a, long b) { return SqrtThreeRat(Rational(a) / b); };
    struct Row {
        std::string claim;
        SqrtThreeRat lhs, rhs;
        int stated;  // sign the text asserts for lhs - rhs
    };
    SqrtThreeRat phi = sq3(2, 1);
    std::vector<Row> rows{
        // cusp volume list below sqrt3/8 in the (2,3,6) case
        {"r3/24 < r3/8", r3 * q(1, 24), r3 * q(1, 8), -1},
        {"r3/12 < r3/8", r3 * q(1, 12), r3 * q(1, 8), -1},
        {"1/8 < r3/8", q(1, 8), r3 * q(1, 8), -1},
        {"(r21/24)^2 < (r3/8)^2", q(21, 576), q(3, 64), -1},
        {"r3(3+r5)/48 < r3/8, i.e. 5 < 3^2", q(5, 1), q(9, 1), -1},
        // (2,4,4) case against 1/4
        {"1/8 < 1/4", q(1, 8), q(1, 4), -1},
        {"(r2/8)^2 < (1/4)^2", q(2, 64), q(1, 16), -1},
        // bounds themselves
        {"r3/8 < r3/4", r3 * q(1, 8), r3 * q(1, 4), -1},
        // the translation-length step
        {"(2+r3) r3/24 < r3/8", phi * r3 * q(1, 24), r3 * q(1, 8), -1},
        {"(2+r3) r3/12 < r3/4", phi * r3 * q(1, 12), r3 * q(1, 4), -1},
        {"(2+r3) r3/24 < (2+r3) r3/12", phi * r3 * q(1, 24), phi * r3 * q(1, 12), -1},
    };
    int flagged = 0;
    for (auto& r : rows) {
        auto a = audit_inequality(r.lhs, r.rhs);
        bool agrees = a.ordering == r.stated;
        if (!agrees) ++flagged;
        o.note(std::string(agrees ? "agrees   " : "MISMATCH ") + r.claim + " :: " + a.certificate);
        // the exact sign must also match a floating estimate
        double gap = r.lhs.approx() - r.rhs.approx();
        o.require((gap > 0) - (gap < 0) == a.ordering, "exact and floating signs agree for " + r.claim);
    }
    o.note(std::to_string(flagged) + " of " + std::to_string(rows.size()) + " stated directions disagree with exact evaluation");
    return o;
}

Outcome property_suites() {
    Outcome o;
    for (auto& n : {"Q", "R", "E", "snub", "square", "triangle", "six-two"}) {
        auto t = builtin_tiling(n);
        SqrtThreeRat tiles = sq3(Rational(static_cast<long>(t.count(TileKind::Square))),
                                 Rational(static_cast<long>(t.count(TileKind::Triangle))) / 4);
        o.require(validate(t).ok && tiles == t.covolume(), std::string("area balance on ") + n);
        o.require(dual_tessellation(t).total_area == t.covolume(), std::string("dual area balance on ") + n);
        auto full = symmetry_group(t);
        for (int order : {0, 2, 3, 4, 6}) {
            if (order && !full.rotations[12 / order]) continue;
            auto g = order ? rotation_subgroup(full, order) : full;
            auto r = halfedge_orbit_analysis(t, g);
            std::size_t total = 0;
            for (auto s : r.orbit_sizes) total += s;
            o.require(r.bookkeeping_ok && total == r.half_edges, std::string("orbit bookkeeping on ") + n + "/" + std::to_string(order));
        }
    }
    auto local = local_patch_search();
    o.require(!local.refused && local.classes.size() == 2, "local search finds exactly two configurations");
    o.note("local: candidates=" + std::to_string(local.candidates) + " classes=" + std::to_string(local.classes.size()));
    return o;
}

}  // namespace

int main() {
    std::vector<Criterion> all{
        {1, "unit enumeration", unit_enumeration, ""},
        {2, "meridian modulus", meridian, ""},
        {3, "triangle-type obstructions", type_obstructions, ""},
        {4, "no-ace arithmetic", no_ace, ""},
        {5, "short-translation classification", classification, ""},
        {6, "Voronoi cell geometry", voronoi_geometry,
         "the stated tetrahedral apex (3+i r3)/4 has |z|^2 = 3/4, incompatible with height^2 2/3 on the unit "
         "hemispheres; the bisectors meet over (3+i r3)/6"},
        {7, "dual tessellation orbits of E", dual_orbits, ""},
        {8, "valence-6 spacing on E", valence_six, ""},
        {9, "area obstruction", area, ""},
        {10, "volume decomposition", volume_solver, ""},
        {11, "inequality audit", inequality_audit, ""},
        {12, "property suites", property_suites, ""},
    };
    int hard_failures = 0;
    for (auto& c : all) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note(std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title;
        if (!o.pass && !c.unattainable.empty()) std::cout << " (documented unattainable: " << c.unattainable << ")";
        std::cout << "\n";
        for (auto& n : o.notes) std::cout << "       " << n << "\n";
        if (o.pass) continue;
        // an unattainable criterion may only fail on its one unattainable requirement
        std::size_t failed = 0;
        for (auto& n : o.notes) failed += n.rfind("failed: ", 0) == 0;
        bool excused = !c.unattainable.empty() && failed == 1;
        if (!excused) ++hard_failures;
    }
    std::cout << (hard_failures ? "acceptance: FAIL" : "acceptance: OK") << " (" << hard_failures << " unexcused failures)\n";
    return hard_failures ? 1 : 0;
}
