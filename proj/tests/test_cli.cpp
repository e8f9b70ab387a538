#include <mixplat/named.hpp>
#include <mixplat/svg.hpp>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

using namespace mixplat;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(MIXPLAT_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::set<std::string> classes(const std::string& svg) {
    std::set<std::string> out;
    std::regex re("class=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) out.insert((*it)[1]);
    return out;
}

nlohmann::json structured(const std::string& args) { return nlohmann::json::parse(run("--format structured " + args).out); }

}  // namespace

TEST(Svg, DecimalRounding) {
    EXPECT_EQ(decimal12(SqrtThreeRat(Rational(1, 3))), "0.333333333333");
    EXPECT_EQ(decimal12(SqrtThreeRat(Rational(-2, 3))), "-0.666666666667");
    EXPECT_EQ(decimal12(SqrtThreeRat(Rational(0), Rational(1))), "1.732050807569");
    EXPECT_EQ(decimal12(SqrtThreeRat(Rational(5, 2) / 1000000000000)), "0.000000000002");  // half goes to even
    EXPECT_EQ(decimal12(SqrtThreeRat(Rational(7, 2) / 1000000000000)), "0.000000000004");
    EXPECT_EQ(decimal12(SqrtThreeRat(Rational(0))), "0.000000000000");
}

TEST(Svg, GoldenTotalEclipse) {
    std::string svg = render_tiling_svg(make_E());
    EXPECT_EQ(svg, slurp(MIXPLAT_GOLDEN "/E.svg"));
    EXPECT_EQ(svg, render_tiling_svg(make_E()));
}

TEST(Svg, TypeColouringOfR) {
    SvgOptions o;
    o.type_colours = true;
    auto cs = classes(render_tiling_svg(make_R(), o));
    std::set<std::string> fills;
    for (auto& c : cs)
        if (c == "square" || c.rfind("triangle", 0) == 0) fills.insert(c);
    EXPECT_EQ(fills, (std::set<std::string>{"square", "triangle OOT", "triangle OTT", "triangle TTT"}));
    EXPECT_TRUE(cs.count("domain"));
    EXPECT_TRUE(cs.count("centre order6"));
    EXPECT_TRUE(cs.count("centre order3"));
    EXPECT_TRUE(cs.count("centre order2"));
}

TEST(Svg, DualOfTotalEclipse) {
    auto cs = classes(render_dual_svg(make_E()));
    EXPECT_EQ(cs, (std::set<std::string>{"face OTOTT", "face TTTTTT"}));
}

TEST(Cli, Units) {
    auto r = run("units --min 1 --max 36");
    EXPECT_EQ(r.code, 0);
    auto j = structured("units --min 1 --max 36");
    ASSERT_EQ(j["count"], 2);
    EXPECT_EQ(j["classes"][0]["modulus_sq"], "2 + 1*r3");
    EXPECT_EQ(j["classes"][1]["modulus_sq"], "7 + 4*r3");
    EXPECT_EQ(run("units --min 5 --max 2").code, 2);
}

TEST(Cli, TilingCommands) {
    EXPECT_EQ(run("tiling validate builtin:E").code, 0);
    auto q = run("tiling types builtin:Q");
    EXPECT_EQ(q.code, 1);
    EXPECT_NE(q.out.find("OTT present, no OOT/TTT"), std::string::npos);
    auto j = structured("tiling types builtin:Q");
    EXPECT_EQ(j["census"], (nlohmann::json{{"OTT", 6}, {"OOO", 2}}));
    EXPECT_EQ(run("tiling types builtin:R").code, 0);
    EXPECT_EQ(structured("tiling symmetry builtin:E")["tag"], "p6");
    EXPECT_EQ(run("tiling validate /nonexistent/file").code, 2);
    EXPECT_EQ(run("tiling builtin nosuch").code, 2);
}

TEST(Cli, BuiltinRoundTripsThroughFile) {
    auto text = run("tiling builtin R").out;
    std::string path = testing::TempDir() + "mixplat_R.tiling";
    std::ofstream(path) << text;
    EXPECT_EQ(run("tiling validate " + path).code, 0);
    EXPECT_EQ(structured("tiling symmetry " + path)["min_translation_sq"], "7 + 4*r3");
    std::ofstream(path) << "basis (1) (z^3)\nT (0) (1) (z^2)\n";
    auto bad = run("tiling validate " + path);
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.out.find("ok: false"), std::string::npos);
}

TEST(Cli, RenderIsDeterministic) {
    auto a = run("tiling render builtin:E"), b = run("tiling render builtin:E");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, slurp(MIXPLAT_GOLDEN "/E.svg"));
    EXPECT_NE(run("tiling render --dual builtin:E").out.find("face OTOTT"), std::string::npos);
}

TEST(Cli, Classify) {
    auto three = structured("classify three-tilings");
    ASSERT_EQ(three["count"], 3);
    EXPECT_EQ(three["tilings"][0]["name"], "Q");
    EXPECT_EQ(three["tilings"][1]["name"], "E");
    EXPECT_EQ(three["tilings"][2]["name"], "R");
    EXPECT_EQ(three["tilings"][0]["min_translation_sq"], "4 + 2*r3");
    EXPECT_EQ(run("classify riscs builtin:E").code, 0);
    EXPECT_EQ(run("classify riscs builtin:snub").code, 1);
    EXPECT_EQ(run("classify noace 12").code, 0);
    EXPECT_EQ(run("classify noace 13").code, 1);
    EXPECT_EQ(run("classify noace 0").code, 2);
    EXPECT_EQ(run("classify area '2 + 1*r3'").code, 1);
    EXPECT_EQ(run("classify area '7 + 4*r3'").code, 0);
    EXPECT_EQ(run("classify area nonsense").code, 2);
    EXPECT_EQ(run("classify slop p6").code, 0);
    EXPECT_EQ(run("classify slop p3").code, 0);
    EXPECT_EQ(run("classify slop p4").code, 2);
    auto orb = structured("classify orbits builtin:E");
    EXPECT_EQ(orb["long_orbits"], 8);
    EXPECT_EQ(structured("classify orbits builtin:E --rotation-order 3")["pentagon_orbits"], 4);
    EXPECT_EQ(structured("classify audit '0 + 1/8*r3' '1/8 + 1/12*r3'")["ordering"], "less");
    EXPECT_EQ(structured("classify pairs")["count"], 3);
    EXPECT_EQ(structured("classify local")["classes"].size(), 2u);
}

TEST(Cli, VoronoiAndVolume) {
    EXPECT_EQ(structured("voronoi cell tet")["apex_height_sq"], "2/3 + 0*r3");
    EXPECT_EQ(structured("voronoi cell oct")["apex"], "1/2 + 0*z + 0*z^2 + 1/2*z^3");
    EXPECT_EQ(run("voronoi cell cube").code, 2);
    auto d = structured("voronoi dual builtin:E");
    EXPECT_EQ(d["area_matches"], true);
    EXPECT_EQ(run("voronoi dual builtin:E").code, 0);
    auto v = structured("volume decompose 5.6937455890 5.6937455900");
    ASSERT_EQ(v["count"], 1);
    EXPECT_EQ(v["solutions"][0]["n1"], 2);
    EXPECT_EQ(v["solutions"][0]["n2"], 1);
    EXPECT_EQ(run("volume decompose 8 12").code, 1);
    EXPECT_EQ(run("volume decompose 6 5").code, 2);
    std::string path = testing::TempDir() + "mixplat_vol.csv";
    std::ofstream(path) << "name,lo,hi\ntwo_tet_one_oct,5.6937455890,5.6937455900\n";
    EXPECT_EQ(structured("volume scan " + path)["rows"][0]["decomposition"][0]["n1"], 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("--format yaml units").code, 2);
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("tiling").code, 2);
}
