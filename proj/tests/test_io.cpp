#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <unistd.h>

#include "cy4/json_io.hpp"
#include "subprocess.hpp"

using namespace cy4;
namespace fs = std::filesystem;

namespace {

const char* const kA1Text = "[[-1,0,0],[0,1,0],[0,0,1]]";
const char* const kA2Text = "[[1,0,0],[-1,0,1],[1,1,0]]";

Mat3 a1() { return parse_matrix(kA1Text); }
Mat3 a2() { return parse_matrix(kA2Text); }

fs::path scratch_dir() {
    fs::path p = fs::temp_directory_path() / ("cy4_io_" + std::to_string(getpid()));
    fs::create_directories(p);
    return p;
}

void write_file(const fs::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::trunc);
    out << s;
}

} // namespace

TEST_CASE("matrix text parsing") {
    Mat3 m = a1();
    CHECK(m.at(0, 0) == EisensteinInt{-1, 0});
    CHECK(m.at(1, 1) == eis_one);
    CHECK(det(m) == EisensteinInt{-1, 0});

    CHECK(parse_matrix(" [ [ -1 , 0 , 0 ] , [ 0 , 1 , 0 ] , [ 0 , 0 , 1 ] ] ") == m);
    CHECK(parse_matrix("[[\xE2\x88\x92" "1,0,0],[0,1,0],[0,0,1]]") == m);

    Mat3 e = parse_matrix("[[5,w,-w],[3*w,-3*w,1+w],[1-w,2+3*w,2-3*w]]");
    CHECK(e.at(0, 0) == EisensteinInt{5, 0});
    CHECK(e.at(0, 1) == eis_zeta);
    CHECK(e.at(0, 2) == EisensteinInt{0, -1});
    CHECK(e.at(1, 0) == EisensteinInt{0, 3});
    CHECK(e.at(1, 1) == EisensteinInt{0, -3});
    CHECK(e.at(1, 2) == EisensteinInt{1, 1});
    CHECK(e.at(2, 0) == EisensteinInt{1, -1});
    CHECK(e.at(2, 1) == EisensteinInt{2, 3});
    CHECK(e.at(2, 2) == EisensteinInt{2, -3});
}

TEST_CASE("matrix text rejection") {
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1,0],[0,1]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1,0,0],[0,1,0]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1.5,0,0],[0,1,0],[0,0,1]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[x,0,0],[0,1,0],[0,0,1]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1,0,0],[0,1,0],[0,0,1]]trailing"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1,0,0],[0,1,0],[0,0,1]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[99999999999999999999,0,0],[0,1,0],[0,0,1]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("{\"rows\": \"nope\"}"), ParseError);
    CHECK_THROWS_AS(parse_matrix("{\"rows\": [[[1.5,0]]]}"), ParseError);
}

TEST_CASE("matrix rendering round trips") {
    CHECK(render_matrix_text(a1()) == kA1Text);
    CHECK(render_matrix_text(a2()) == kA2Text);

    std::mt19937 rng(6021);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int t = 0; t < 500; ++t) {
        Mat3 m;
        for (auto& x : m.e) x = EisensteinInt{coeff(rng), coeff(rng)};
        CHECK(parse_matrix(render_matrix_text(m)) == m);
        CHECK(mat3_from_json(to_json(m)) == m);
        CHECK(parse_matrix(to_json(m).dump()) == m);
    }
}

TEST_CASE("matrix sources can be files") {
    fs::path dir = scratch_dir();
    fs::path text_file = dir / "m.txt";
    fs::path json_file = dir / "m.json";
    fs::path path_file = dir / "indirect.txt";
    write_file(text_file, std::string(kA2Text) + "\n");
    write_file(json_file, to_json(a1()).dump());
    write_file(path_file, text_file.string());

    CHECK(parse_matrix(text_file.string()) == a2());
    CHECK(parse_matrix(json_file.string()) == a1());
    CHECK_THROWS_AS(parse_matrix((dir / "absent.txt").string()), ParseError);
    CHECK_THROWS_AS(parse_matrix(path_file.string()), ParseError);

    fs::remove_all(dir);
}

TEST_CASE("json field validation") {
    CHECK_THROWS_AS(eisenstein_from_json(nlohmann::json::parse("[1]")), ParseError);
    CHECK_THROWS_AS(eisenstein_from_json(nlohmann::json::parse("[1,2,3]")), ParseError);
    CHECK_THROWS_AS(eisenstein_from_json(nlohmann::json::parse("\"1\"")), ParseError);
    CHECK_THROWS_AS(mat3_from_json(nlohmann::json::parse("{}")), ParseError);
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse("{\"idx\": 0}")), ParseError);
    CHECK_THROWS_AS(checkpoint_from_json(nlohmann::json::parse("{\"cursor\": \"x\"}")), ParseError);

    SearchRecord rec;
    rec.idx = 3;
    rec.a1 = a1();
    rec.a2 = a2();
    rec.chi_s1 = rec.chi_s2 = 18;
    rec.chi_m = 108;
    rec.product_charpoly = char_poly(a1() * a2());
    rec.key = "some-key";
    SearchRecord back = record_from_json(to_json(rec));
    CHECK(back.idx == rec.idx);
    CHECK(back.a1 == rec.a1);
    CHECK(back.a2 == rec.a2);
    CHECK(back.chi_m == rec.chi_m);
    CHECK(back.product_charpoly == rec.product_charpoly);
    CHECK(back.key == rec.key);

    Checkpoint ck{42, 7, "abcdef0123456789"};
    Checkpoint ck_back = checkpoint_from_json(to_json(ck));
    CHECK(ck_back.cursor == 42);
    CHECK(ck_back.emitted == 7);
    CHECK(ck_back.config_hash == ck.config_hash);
}

TEST_CASE("cli analyze and verify-pair") {
    const std::string cli = cli_path();

    CmdResult an = run_cmd(cli + " analyze --matrix " + sh_quote(kA1Text));
    CHECK(an.code == 0);
    nlohmann::json ja = nlohmann::json::parse(an.out);
    CHECK(ja["admissible"] == true);
    CHECK(ja["trace_profile"] == "SURFACE");
    CHECK(ja["theta_count"] == 9);
    CHECK(ja["fixed_locus"]["complex_dimension"] == 2);
    CHECK(ja["fixed_locus"]["component_count"] == 4);
    CHECK(ja["quasi_fixed"][0] == 9);
    CHECK(ja["quasi_fixed"][1] == 9);

    CmdResult vp = run_cmd(cli + " verify-pair --a1 " + sh_quote(kA1Text) + " --a2 " + sh_quote(kA2Text));
    CHECK(vp.code == 0);
    nlohmann::json jv = nlohmann::json::parse(vp.out);
    CHECK(jv["pair_admissible"] == true);
    CHECK(jv["product_order"] == "INFINITE");
    CHECK(jv["euler"]["chi_m"] == 108);

    CmdResult same = run_cmd(cli + " verify-pair --a1 " + sh_quote(kA1Text) + " --a2 " + sh_quote(kA1Text));
    CHECK(same.code == 1);
    CHECK(nlohmann::json::parse(same.out)["pair_admissible"] == false);
}

TEST_CASE("cli euler and oracle") {
    const std::string cli = cli_path();

    CmdResult eu = run_cmd(cli + " euler --a1 " + sh_quote(kA1Text) + " --a2 " + sh_quote(kA2Text) + " --pretty");
    CHECK(eu.code == 0);
    nlohmann::json je = nlohmann::json::parse(eu.out);
    CHECK(je["chi_y"] == 72);
    CHECK(je["chi_s1"] == 18);
    CHECK(je["chi_x1"] == 126);
    CHECK(je["chi_m"] == 108);

    CmdResult bad = run_cmd(cli + " euler --a1 " + sh_quote(kA1Text) + " --a2 " + sh_quote(kA1Text));
    CHECK(bad.code == 1);

    CmdResult onear = run_cmd(cli + " oracle --matrix " + sh_quote(kA1Text) + " --sub-identity --grid 2");
    CHECK(onear.code == 0);
    nlohmann::json jo = nlohmann::json::parse(onear.out);
    CHECK(jo["brute"] == 64);
    CHECK(jo["predicted"] == 64);
    CHECK(jo["match"] == true);
    CHECK(jo["verdict"] == "MATCH");
}

TEST_CASE("cli rejects bad input") {
    const std::string cli = cli_path();
    CHECK(run_cmd(cli + " analyze --matrix " + sh_quote("[[oops]]")).code == 2);
    CHECK(run_cmd(cli + " analyze --no-such-flag").code == 2);
    CHECK(run_cmd(cli + " search --bound 5 --out /tmp/unused.jsonl").code == 2);
    CHECK(run_cmd("CY4_WORKERS=bogus " + cli + " search --bound 1 --out /tmp/unused.jsonl").code == 2);
    CHECK(run_cmd(cli).code == 2);
}

TEST_CASE("cli report") {
    const std::string cli = cli_path();
    fs::path dir = scratch_dir();
    fs::path records = dir / "records.jsonl";

    SearchRecord rec;
    rec.idx = 0;
    rec.a1 = a1();
    rec.a2 = a2();
    rec.chi_s1 = rec.chi_s2 = 18;
    rec.chi_m = 108;
    rec.product_charpoly = char_poly(a1() * a2());
    rec.key = dedup_key(a1(), a2());
    write_file(records, to_json(rec).dump() + "\n");

    CmdResult rep = run_cmd(cli + " report --in " + sh_quote(records.string()));
    CHECK(rep.code == 0);
    nlohmann::json jr = nlohmann::json::parse(rep.out);
    CHECK(jr["pairs"] == 1);
    CHECK(jr["all_chi_m_108"] == true);
    CHECK(jr["verdict"] == "all chi_m = 108");
    CHECK(jr["chi_histogram"]["108"] == 1);

    write_file(records, "garbage\n");
    CHECK(run_cmd(cli + " report --in " + sh_quote(records.string())).code == 2);

    fs::remove_all(dir);
}
