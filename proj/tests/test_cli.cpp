#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ratgeom/cli_core.hpp"

using namespace ratgeom;

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = std::string(RATGEOM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    if (exit_code) *exit_code = WEXITSTATUS(status);
    return out;
}

Json square_points() {
    return Json{{"points", Json::array({Json{{"label", "A"}, {"x", "0"}, {"y", "0"}},
                                        Json{{"label", "B"}, {"x", "1"}, {"y", "0"}},
                                        Json{{"label", "C"}, {"x", "1"}, {"y", "1"}},
                                        Json{{"label", "D"}, {"x", "0"}, {"y", "1"}}})}};
}

}  // namespace

TEST_CASE("cmd_multiples reproduces the small multiples") {
    auto r = cmd_multiples(BigRat(1), BigRat(2), 3);
    CHECK(r.status == CommandResult::Status::ok);
    const Json& rows_ = r.payload["points"];
    CHECK(rows_.size() == 3);
    CHECK(rows_[0]["U"] == "3");
    CHECK(rows_[0]["W"] == "3");
    CHECK(rows_[2]["U"] == "-189/25");
    CHECK(rows_[2]["W"] == "-2091/125");
}

TEST_CASE("cmd_multiples rejects singular params") {
    auto r = cmd_multiples(BigRat(1), BigRat(0), 3);
    CHECK(r.status == CommandResult::Status::error);
    CHECK(r.exit_code() == 1);
}

TEST_CASE("cmd_approx triangle and verify round trip") {
    Json tri = {{"points", Json::array({Json{{"label", "A"}, {"x", "0"}, {"y", "0"}},
                                        Json{{"label", "B"}, {"x", "3"}, {"y", "0"}},
                                        Json{{"label", "C"}, {"x", "0"}, {"y", "4"}}})}};
    auto r = cmd_approx("triangle", tri, Real("0.1"), {});
    CHECK(r.status == CommandResult::Status::ok);
    CHECK(r.payload["gap"].get<double>() == 0.0);

    auto v = cmd_verify(r.payload);
    CHECK(v.status == CommandResult::Status::ok);
    CHECK(v.payload["valid"].get<bool>());
}

TEST_CASE("cmd_approx quad emits a verifiable certificate") {
    auto r = cmd_approx("quad", square_points(), Real("0.1"), {});
    CHECK(r.status != CommandResult::Status::error);
    auto v = cmd_verify(r.payload);
    CHECK(v.payload["valid"].get<bool>());
    CHECK(r.payload["distances"].size() == 6);
}

TEST_CASE("cmd_approx rejects malformed input") {
    auto r = cmd_approx("triangle", Json{{"points", "nonsense"}}, Real("0.1"), {});
    CHECK(r.status == CommandResult::Status::error);
}

TEST_CASE("cmd_verify flags tampering with reasons") {
    Json tri = {{"points", Json::array({Json{{"label", "A"}, {"x", "0"}, {"y", "0"}},
                                        Json{{"label", "B"}, {"x", "3"}, {"y", "0"}},
                                        Json{{"label", "C"}, {"x", "0"}, {"y", "4"}}})}};
    auto r = cmd_approx("triangle", tri, Real("0.1"), {});

    Json tampered_distance = r.payload;
    tampered_distance["distances"][0]["value"] = "7";
    auto v1 = cmd_verify(tampered_distance);
    CHECK(v1.status == CommandResult::Status::error);
    CHECK(!v1.payload["reasons"].empty());

    Json tampered_area = r.payload;
    tampered_area["area"] = "7";
    auto v2 = cmd_verify(tampered_area);
    CHECK(v2.status == CommandResult::Status::error);
    CHECK(!v2.payload["reasons"].empty());
}

TEST_CASE("cmd_scan default 5x5 grid") {
    auto r = cmd_scan(BigRat(-2), BigRat(2), 5, BigRat(-2), BigRat(2), 5);
    CHECK(r.status == CommandResult::Status::ok);
    std::string csv = r.payload["csv"].get<std::string>();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "m,n,singular,discriminant,torsion_order,oval_check");
    int rows = 0, singular_rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (line.find(",1,") != std::string::npos && line.find(",0,") > line.find(",1,"))
            ++singular_rows;
    }
    CHECK(rows == 25);
    // the n = 0 and n = -1 columns are singular (5 points each)
    CHECK(csv.find("1,2,0,2880,,1") != std::string::npos);  // (1,2): infinite order, oval ok
}

TEST_CASE("cmd_scan deterministic output") {
    auto r1 = cmd_scan(BigRat(-1), BigRat(1), 3, BigRat(-1), BigRat(1), 3);
    auto r2 = cmd_scan(BigRat(-1), BigRat(1), 3, BigRat(-1), BigRat(1), 3);
    CHECK(r1.payload["csv"] == r2.payload["csv"]);
}

TEST_CASE("cmd_transform round trip and exclusions") {
    auto r = cmd_transform("q2c", BigRat(1), BigRat(2), BigRat(0), BigRat(1), std::nullopt,
                           std::nullopt);
    CHECK(r.status == CommandResult::Status::ok);
    CHECK(r.payload["U"] == "3");
    CHECK(r.payload["W"] == "-3");

    auto back = cmd_transform("c2q", BigRat(1), BigRat(2), std::nullopt, std::nullopt,
                              BigRat::parse(r.payload["U"].get<std::string>()),
                              BigRat::parse(r.payload["W"].get<std::string>()));
    CHECK(back.status == CommandResult::Status::ok);
    CHECK(back.payload["x"] == "0");
    CHECK(back.payload["y"] == "1");

    // c2q of P2 = (0, 12) is the excluded fiber
    auto ex = cmd_transform("c2q", BigRat(1), BigRat(2), std::nullopt, std::nullopt, BigRat(0),
                            BigRat(12));
    CHECK(ex.status == CommandResult::Status::error);
}

TEST_CASE("cli process: multiples exit codes and payload") {
    int code = 0;
    std::string out = run_cli("multiples --m 1 --n 2 --kmax 2", &code);
    CHECK(code == 0);
    Json j = Json::parse(out);
    CHECK(j["status"] == "ok");
    CHECK(j["payload"]["points"][1]["U"] == "17/4");

    run_cli("multiples --m 1 --n 0", &code);
    CHECK(code == 1);
}

TEST_CASE("cli process: approx writes a certificate then verify accepts it") {
    std::string dir = "cli_test_tmp";
    std::string points = dir + "_points.json";
    std::string cert = dir + "_cert.json";
    {
        std::ofstream f(points);
        f << square_points().dump();
    }
    int code = 0;
    run_cli("approx quad " + points + " --eps 0.1 --out " + cert, &code);
    CHECK(code == 0);
    std::string out = run_cli("verify " + cert, &code);
    CHECK(code == 0);
    Json j = Json::parse(out);
    CHECK(j["payload"]["valid"].get<bool>());
    std::remove(points.c_str());
    std::remove(cert.c_str());
}

TEST_CASE("cli process: identical runs produce identical bytes") {
    std::string a = run_cli("multiples --m 4/3 --n 2 --kmax 5");
    std::string b = run_cli("multiples --m 4/3 --n 2 --kmax 5");
    CHECK(a == b);
    std::string c = run_cli("scan --m-min -1 --m-max 1 --m-steps 3 --n-min -1 --n-max 1 --n-steps 3");
    std::string d = run_cli("scan --m-min -1 --m-max 1 --m-steps 3 --n-min -1 --n-max 1 --n-steps 3");
    CHECK(c == d);
}
