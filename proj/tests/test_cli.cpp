#include "wittconics/cli_app.hpp"
#include "wittconics/localglobal.hpp"
#include "wittconics/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace wittconics;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("wittconics_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("quaternion subcommand emits the ramification set") {
    CliResult r = cli({"--json", "quaternion", "-1", "-1"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["result"]["ramified"] == Json::array({"2", "inf"}));
}

TEST_CASE("certify subcommand returns an ordering-count certificate") {
    CliResult r = cli({"--json", "conic", "certify", "1", "1", "-1", "-1"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["result"]["kind"] == "ordering_count");
    CHECK(j["result"]["data"]["count_first"] == "1");
    CHECK(j["result"]["data"]["count_second"] == "0");
    // The certificate JSON round-trips and re-verifies.
    Certificate cert = certificate_from_json(j["result"]);
    CHECK(verify_certificate(cert, Rat(1), Rat(1), Rat(-1), Rat(-1)));
}

TEST_CASE("hyperfield check accepts a clean table and flags a mutated one") {
    TempFile good("q3_good.json"), bad("q3_bad.json");
    FiniteHyperfield H = finite_field_quadratic_hyperfield(3);
    export_hyperfield(H, good.path);
    CliResult ok = cli({"--json", "hyperfield", "check", good.path});
    CHECK(ok.code == 0);
    CHECK(Json::parse(ok.out)["result"]["ok"] == true);

    H.add[1][0] = {1, 2};
    H.add[0][1] = {1, 2};
    {
        std::ofstream f(bad.path);
        f << hyperfield_to_json(H);
    }
    CliResult fail = cli({"--json", "hyperfield", "check", bad.path});
    CHECK(fail.code == 1);
    Json j = Json::parse(fail.out);
    CHECK(j["status"] == "error");
    bool has_i2 = false;
    for (const auto& v : j["result"]["violations"]) has_i2 |= (v["axiom"] == "I(2)");
    CHECK(has_i2);
}

TEST_CASE("hyperfield export/import round-trip") {
    TempFile f1("rt3.json"), f2("rt2adic.json");
    FiniteHyperfield H3 = finite_field_quadratic_hyperfield(3);
    export_hyperfield(H3, f1.path);
    CHECK(import_hyperfield(f1.path) == H3);

    FiniteHyperfield H2 = local_square_class_hyperfield(Place::finite(2));
    REQUIRE(H2.size() == 9);
    export_hyperfield(H2, f2.path);
    CHECK(import_hyperfield(f2.path) == H2);
}

TEST_CASE("hyperfield import rejects malformed tables") {
    TempFile f("broken.json");
    {
        std::ofstream out(f.path);
        out << R"({"elements":["0","1"],"one":1,"mul":[[0,0],[0,1]],"add":[[[0],[1]],[[1],[0]]]})";
    }
    CHECK_THROWS_WITH_AS(import_hyperfield(f.path), doctest::Contains("neg"), std::invalid_argument);
    TempFile g("nontotal.json");
    {
        std::ofstream out(g.path);
        out << R"({"elements":["0","1"],"one":1,"neg":[0,1],"mul":[[0,0],[0,1]],"add":[[[0],[1]],[[1]]]})";
    }
    CHECK_THROWS_AS(import_hyperfield(g.path), std::invalid_argument);
    CliResult r = cli({"hyperfield", "check", "no_such_file.json"});
    CHECK(r.code == 1);
}

TEST_CASE("batch runs lines independently and in order") {
    TempFile f("batch.txt");
    {
        std::ofstream out(f.path);
        out << "hilbert -1 -1 2\n";
        out << "hilbert 2 3 3\n";
        out << "\n";
        out << "hilbert x y z\n";
        out << "quaternion 1 1\n";
    }
    CliResult r = cli({"batch", f.path});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<Json> envelopes;
    while (std::getline(lines, line)) envelopes.push_back(Json::parse(line));
    REQUIRE(envelopes.size() == 4);
    CHECK(envelopes[0]["status"] == "ok");
    CHECK(envelopes[0]["result"]["symbol"] == -1);
    CHECK(envelopes[1]["result"]["symbol"] == -1);
    CHECK(envelopes[2]["status"] == "error");
    CHECK(envelopes[3]["status"] == "ok");
}

TEST_CASE("empty batch produces no envelopes") {
    TempFile f("empty.txt");
    { std::ofstream out(f.path); }
    CliResult r = cli({"batch", f.path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("exit codes") {
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"hilbert", "1"}).code == 2);          // missing arguments
    CHECK(cli({"hilbert", "1x", "2", "3"}).code == 2);  // malformed token
    CHECK(cli({"hilbert", "1", "2", "9"}).code == 1);   // 9 is not a prime: domain error
    CHECK(cli({"hilbert", "0", "1", "2"}).code == 1);   // zero argument: domain error
    CHECK(cli({"quadfield", "12"}).code == 1);          // not squarefree
    CHECK(cli({}).code == 2);
    CliResult named = cli({"hilbert", "1x", "2", "3"});
    CHECK(named.err.find("1x") != std::string::npos);  // message names the token
}

TEST_CASE("every subcommand emits valid JSON in json mode") {
    TempFile f("sweep.json");
    export_hyperfield(finite_field_quadratic_hyperfield(3), f.path);
    std::vector<std::vector<std::string>> sweeps = {
        {"--json", "hilbert", "2", "3", "3"},
        {"--json", "quaternion", "2", "3"},
        {"--json", "conic", "split", "2", "3"},
        {"--json", "conic", "point", "5", "-1"},
        {"--json", "conic", "isom", "2", "3", "3", "2"},
        {"--json", "conic", "certify", "1", "1", "2", "3"},
        {"--json", "witnesses"},
        {"--json", "hyperfield", "local", "7"},
        {"--json", "hyperfield", "local", "inf"},
        {"--json", "hyperfield", "finite", "9"},
        {"--json", "hyperfield", "check", f.path},
        {"--json", "quadfield", "-5"},
        {"--json", "quadfield", "family", "3"},
        {"--json", "gauss", "3", "--", "9", "0", "3"},
    };
    for (const auto& args : sweeps) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        CAPTURE(args[1]);
        CHECK(code == 0);
        Json j = Json::parse(out.str());  // throws on invalid JSON
        CHECK(j["status"] == "ok");
        CHECK(j.contains("result"));
        CHECK(j.contains("diagnostics"));
    }
}

TEST_CASE("text and json modes agree on numeric content") {
    CliResult text = cli({"quadfield", "10"});
    CliResult json = cli({"--json", "quadfield", "10"});
    Json j = Json::parse(json.out);
    CHECK(text.out.find("discriminant " + j["result"]["discriminant"].get<std::string>()) != std::string::npos);
    CHECK(text.out.find("two_rank " + std::to_string(j["result"]["two_rank"].get<int>())) != std::string::npos);

    CliResult t2 = cli({"hilbert", "-1", "-1", "2"});
    CHECK(t2.out.find("-1") != std::string::npos);
}

TEST_CASE("oracle flag cross-checks and succeeds") {
    CHECK(cli({"--oracle", "hilbert", "-1", "-1", "2"}).code == 0);
    CHECK(cli({"--oracle", "quaternion", "2", "3"}).code == 0);
    CHECK(cli({"--oracle", "conic", "split", "5", "-1"}).code == 0);
    CHECK(cli({"--oracle", "--json", "quadfield", "-5"}).code == 0);
}

TEST_CASE("gauss subcommand handles rationals and the separator") {
    CliResult r = cli({"--json", "gauss", "5", "--", "25", "5"});
    Json j = Json::parse(r.out);
    CHECK(j["result"]["valuation"] == "1");  // min(v(25), v(5))
    CliResult inf = cli({"--json", "gauss", "5", "--", "0", "0"});
    CHECK(Json::parse(inf.out)["result"]["valuation"] == "inf");
    CliResult neg = cli({"--json", "gauss", "5", "--", "1/5", "-25"});
    CHECK(Json::parse(neg.out)["result"]["valuation"] == "-1");
}

TEST_CASE("point search bound flag") {
    CliResult r = cli({"--json", "conic", "point", "2", "3", "--bound", "50"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["result"]["point"].is_null());
    CHECK(Json::parse(r.out)["result"]["bound"] == "50");
}
