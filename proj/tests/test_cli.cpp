#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "stabatlas/dicke.hpp"
#include "stabatlas/magic.hpp"
#include "stabatlas/spectrum.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path scratch = [] {
    fs::path p = fs::temp_directory_path() / ("stabatlas-cli-" + std::to_string(getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    // one shared cache so repeated closures cost one computation per suite run
    setenv("STABATLAS_CACHE_DIR", (p / "cache").c_str(), 1);
    return p;
}();

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(STABATLAS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t nr;
    while ((nr = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, nr);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("verify relations checks the whole catalog") {
    RunResult r = run_cli("verify relations");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 16);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("pass ") == 0);
}

TEST_CASE("group close prints order and diameter") {
    RunResult mod = run_cli("group close --gens H1,P1 --mod-phase");
    CHECK(mod.code == 0);
    CHECK(mod.out == "order 24\ndiameter 6\n");
    RunResult full = run_cli("group close --gens H1,P1");
    CHECK(full.code == 0);
    CHECK(full.out == "order 192\ndiameter 16\n");
}

TEST_CASE("census emits one csv row per entropy vector") {
    RunResult two = run_cli("census --n 2");
    CHECK(two.code == 0);
    CHECK(count_lines(two.out) == 3);  // header + two vectors
    CHECK(two.out.find("S_1,states") == 0);
    CHECK(two.out.find("0,36,") != std::string::npos);
    CHECK(two.out.find("1,24,") != std::string::npos);

    RunResult three = run_cli("census --n 3 --format csv");
    CHECK(three.code == 0);
    CHECK(count_lines(three.out) == 6);  // header + five vectors
    // states column adds up to the full count
    std::istringstream lines(three.out);
    std::string line;
    std::getline(lines, line);  // header
    long total = 0;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cell;
        for (int i = 0; i < 4; ++i) std::getline(cells, cell, ',');
        total += std::stol(cell);
    }
    CHECK(total == 1080);
}

TEST_CASE("census json mirrors the csv rows") {
    RunResult r = run_cli("census --n 2 --format json");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["n"] == 2);
    CHECK(j["total_states"] == "60");
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["holographic"] == true);
}

TEST_CASE("dicke entropy matches the library closed form") {
    RunResult r = run_cli("dicke entropy 4 2");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "ell,entropy");
    for (int ell = 1; ell < 4; ++ell) {
        REQUIRE(std::getline(lines, line));
        auto comma = line.find(',');
        CHECK(std::stoi(line.substr(0, comma)) == ell);
        CHECK(std::stod(line.substr(comma + 1)) ==
              doctest::Approx(stabatlas::dicke_entropy(4, 2, ell)).epsilon(1e-14));
    }
}

TEST_CASE("dicke cone reports the inequality verdicts") {
    RunResult r = run_cli("dicke cone 5 2");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["mmi"] == false);
    CHECK(j["sqec"] == true);
    CHECK(j["shec"] == false);
    RunResult tri = run_cli("dicke cone 3 1");
    json jt = json::parse(tri.out);
    CHECK(jt["mmi"] == true);
    CHECK(jt["shec"] == true);
}

TEST_CASE("dicke stars lists the realizing graphs and their total") {
    RunResult r = run_cli("dicke stars 5 1 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("coefficient,weight,cut_size,min_cut\n") == 0);
    auto vpos = r.out.find("value ");
    auto epos = r.out.find("entropy ");
    REQUIRE(vpos != std::string::npos);
    REQUIRE(epos != std::string::npos);
    double value = std::stod(r.out.substr(vpos + 6));
    double entropy = std::stod(r.out.substr(epos + 8));
    CHECK(value == doctest::Approx(entropy).epsilon(1e-12));
}

TEST_CASE("magic m2 evaluates a spectrum file") {
    fs::path spec = scratch / "two_outcome.json";
    {
        std::ofstream out(spec);
        out << "{\"values\": [0.75, 0.25]}";
    }
    RunResult r = run_cli("magic m2 --spectrum " + spec.string());
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["rank"] == 2);
    CHECK(std::stod(j["m2_estimate"].get<std::string>()) ==
          doctest::Approx(stabatlas::m2_two_outcome(0.25)).epsilon(1e-12));
    CHECK(j.contains("m2_averaged"));  // rank 2 <= 8 so the closed form applies
}

TEST_CASE("reach reports the orbit and stabilizer sizes") {
    RunResult r = run_cli("reach --gens H1,H2,C12,C21 --state dicke:3,1");
    CHECK(r.code == 0);
    CHECK(r.out == "orbit 288\nstabilizer 4\n");
}

TEST_CASE("reach accepts an exactifiable state file") {
    fs::path state = scratch / "bell.json";
    {
        std::ofstream out(state);
        out << "{\"n\": 2, \"amplitudes\": [[0.7071067811865476, 0], [0, 0], [0, 0], "
               "[0.7071067811865476, 0]]}";
    }
    RunResult r = run_cli("reach --gens H1,H2,C12,C21 --state file:" + state.string());
    CHECK(r.code == 0);
    CHECK(r.out == "orbit 24\nstabilizer 48\n");
}

TEST_CASE("contract folds the orbit onto double cosets") {
    RunResult r = run_cli("contract --gens H1,H2,C12,C21 --state ghz:2");
    CHECK(r.code == 0);
    CHECK(r.out == "cosets 24\nclasses 2\n");
}

TEST_CASE("cayley exports the requested format") {
    fs::path dir = scratch / "cayley_dot";
    RunResult r = run_cli("cayley --gens H1,P1 --mod-phase --format dot --out " + dir.string());
    CHECK(r.code == 0);
    std::string dot = slurp(dir / "cayley.dot");
    CHECK(dot.rfind("digraph", 0) == 0);
    std::size_t arcs = 0;
    for (std::size_t at = dot.find(" -> "); at != std::string::npos; at = dot.find(" -> ", at + 1))
        ++arcs;
    CHECK(arcs == 24 * 2);

    fs::path jdir = scratch / "cayley_json";
    RunResult rj = run_cli("cayley --gens H1,P1 --mod-phase --format json --out " + jdir.string());
    CHECK(rj.code == 0);
    json jg = json::parse(slurp(jdir / "cayley.json"));
    CHECK(jg["vertices"].size() == 24);
    CHECK(jg["vertices"][0] == "1");  // the identity's empty word
    CHECK(jg["arcs"].size() == 48);
}

TEST_CASE("exit codes separate usage errors from computation errors") {
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("census --n 9").code == 2);
    CHECK(run_cli("group close").code == 2);  // --gens is required
    CHECK(run_cli("reach --gens H1,NOPE --state ghz:2").code == 2);
    CHECK(run_cli("reach --gens H1,P1 --state martian:4").code == 2);
    CHECK(run_cli("magic m2 --spectrum /nonexistent/spectrum.json").code == 1);
    CHECK(run_cli("--help").code == 0);
}

TEST_CASE("reruns are byte-identical and threads never change output") {
    std::string args = "ising --n 4 --gmin -0.1 --gmax 0.1 --steps 3 --cut 2";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    RunResult c = run_cli(args + " --threads 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(count_lines(a.out) == 4);  // header + three samples

    RunResult d = run_cli("census --n 3");
    RunResult e = run_cli("census --n 3");
    CHECK(d.out == e.out);

    // the magic-side spelling of the scan is the same command
    RunResult f = run_cli("magic " + args);
    CHECK(f.code == 0);
    CHECK(f.out == a.out);
}

TEST_CASE("manifest lists outputs and its hash ignores timestamps") {
    fs::path dir_a = scratch / "man_a";
    fs::path dir_b = scratch / "man_b";
    RunResult a = run_cli("census --n 2 --out " + dir_a.string());
    RunResult b = run_cli("census --n 2 --out " + dir_b.string());
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(slurp(dir_a / "census_n2.csv") == slurp(dir_b / "census_n2.csv"));
    json ma = json::parse(slurp(dir_a / "manifest.json"));
    json mb = json::parse(slurp(dir_b / "manifest.json"));
    CHECK(ma["command"] == "census");
    REQUIRE(ma["outputs"].size() == 1);
    CHECK(ma["outputs"][0]["file"] == "census_n2.csv");
    CHECK(ma["outputs"][0]["hash"] == mb["outputs"][0]["hash"]);
    CHECK(ma["hash"] == mb["hash"]);
    CHECK(ma["tool_version"] == mb["tool_version"]);
}
