#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "lattes/endo.hpp"
#include "lattes/text.hpp"
#include "run.hpp"

using namespace lattes;
using fx::frac;
using fx::qi;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("decide, human output") {
    CliResult r = run({"decide", "--ring", "gaussian", "--omega", "2+1*i",
                       "--omega-prime", "1-2*i"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "curve: y^2 = x^3 + x"));
    CHECK(contains(r.out, "quotient = sqrt(-1)"));
    CHECK(contains(r.out, "diagonal in E x E: pre-periodic, minimal pair (0, 4)"));
    CHECK(contains(r.out, "diagonal in P1 x P1: pre-periodic, minimal pair (0, 2)"));
    CHECK(contains(r.out, "verification [ee, k=4, ring]: confirmed"));
    CHECK(contains(r.out, "verification [ee, k=4, symbolic]: confirmed"));
    CHECK(contains(r.out, "verification [p1, k=2, ring]: confirmed"));
    CHECK(contains(r.out, "verification [p1, k=2, symbolic]: confirmed"));
    CHECK(r.err.empty());
}

TEST_CASE("decide, json output is stable") {
    std::vector<std::string> args = {"decide",        "--ring", "gaussian",
                                     "--omega",       "2+1*i",  "--omega-prime",
                                     "1-2*i",         "--format", "json"};
    CliResult r1 = run(args);
    CliResult r2 = run(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    nlohmann::json j = nlohmann::json::parse(r1.out);
    CHECK(j["request"]["subcommand"] == "decide");
    CHECK(j["request"]["ring"] == "gaussian");
    CHECK(j["request"]["omega"] == "2+1*i");
    CHECK(j["request"]["omega_prime"] == "1-2*i");
    CHECK(j["request"]["degree_budget"] == 2000);
    CHECK(j["quotient"] == "sqrt(-1)");
    CHECK(j["ee"]["preperiodic"] == true);
    CHECK(j["ee"]["k"] == 4);
    CHECK(j["p1"]["preperiodic"] == true);
    CHECK(j["p1"]["k"] == 2);
    REQUIRE(j["verifications"].size() == 4);
    for (const auto& rec : j["verifications"]) {
        CHECK(rec["result"] == "confirmed");
    }
}

TEST_CASE("decide, equal eisenstein multipliers return immediately") {
    CliResult r = run({"decide", "--ring", "eisenstein", "--omega", "sqrt-3",
                       "--omega-prime", "sqrt-3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "curve: y^2 = x^3 + 1"));
    CHECK(contains(r.out, "quotient = 1"));
    CHECK(contains(r.out, "diagonal in E x E: pre-periodic, minimal pair (0, 1)"));
    CHECK(contains(r.out, "diagonal in P1 x P1: pre-periodic, minimal pair (0, 1)"));
}

TEST_CASE("decide, a wandering pair") {
    CliResult r = run({"decide", "--ring", "gaussian", "--omega", "2",
                       "--omega-prime", "3", "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["ee"]["preperiodic"] == false);
    CHECK(j["ee"]["k"].is_null());
    CHECK(j["p1"]["preperiodic"] == false);
    CHECK(j["verifications"].empty());
    CHECK(j["quotient"] == "2/3");
}

TEST_CASE("lattes subcommand") {
    CliResult r = run({"lattes", "--ring", "gaussian", "--A", "1", "--omega",
                       "0+1*i"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "map: -x"));
    CHECK(contains(r.out, "degree: 1"));

    CliResult r5 = run({"lattes", "--ring", "gaussian", "--omega", "2+1*i",
                        "--format", "json"});
    CHECK(r5.code == 0);
    nlohmann::json j = nlohmann::json::parse(r5.out);
    CHECK(j["degree"] == 5);
    RatFunc reparsed = parse_ratfunc(RingId::gaussian,
                                     j["map"].get<std::string>());
    Curve c = Curve::gaussian_default();
    CHECK(reparsed == lattes::lattes(c, qi(RingId::gaussian, 2, 1)).map);
}

TEST_CASE("endo subcommand round-trips its own output") {
    CliResult r = run({"endo", "--ring", "gaussian", "--omega", "2+1*i",
                       "--format", "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["degree"] == 5);
    Curve c = Curve::gaussian_default();
    Endo e = endo_from_quadint(c, qi(RingId::gaussian, 2, 1));
    CHECK(parse_ratfunc(c.ring, j["X"].get<std::string>()) == e.X());
    CHECK(parse_ratfunc(c.ring, j["Y"].get<std::string>()) == e.Y());

    CliResult rh = run({"endo", "--ring", "gaussian", "--omega", "2+1*i"});
    CHECK(contains(rh.out, "X: "));
    CHECK(contains(rh.out, "Y: "));
    CHECK(contains(rh.out, "degree: 5"));
}

TEST_CASE("endo subcommand accepts the zero multiplier") {
    CliResult r = run({"endo", "--ring", "gaussian", "--omega", "0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "the zero map (everything to the point at infinity)"));
    CHECK(contains(r.out, "degree: 0"));
    CliResult rj = run({"endo", "--ring", "gaussian", "--omega", "0",
                        "--format", "json"});
    nlohmann::json j = nlohmann::json::parse(rj.out);
    CHECK(j["X"].is_null());
    CHECK(j["Y"].is_null());
    CHECK(j["degree"] == 0);
}

TEST_CASE("verify respects --expect") {
    std::vector<std::string> base = {"verify", "--ring", "gaussian",
                                     "--omega", "2+1*i", "--omega-prime",
                                     "1-2*i", "--level", "ee", "--k", "2"};
    std::vector<std::string> expect_ok = base;
    expect_ok.push_back("--expect");
    expect_ok.push_back("refuted");
    CHECK(run(expect_ok).code == 0);

    std::vector<std::string> expect_bad = base;
    expect_bad.push_back("--expect");
    expect_bad.push_back("confirmed");
    CliResult r = run(expect_bad);
    CHECK(r.code == 1);
    CHECK(contains(r.out, "overall: refuted"));

    CliResult rp1 = run({"verify", "--ring", "gaussian", "--omega", "2+1*i",
                         "--omega-prime", "1-2*i", "--level", "p1", "--k", "2",
                         "--expect", "confirmed"});
    CHECK(rp1.code == 0);
    CHECK(contains(rp1.out, "overall: confirmed"));
}

TEST_CASE("verify with a pre-period") {
    CliResult r = run({"verify", "--ring", "gaussian", "--omega", "1+1*i",
                       "--omega-prime", "1-1*i", "--k", "4", "--n", "1",
                       "--format", "json", "--expect", "confirmed"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["request"]["k"] == 4);
    CHECK(j["request"]["n"] == 1);
    REQUIRE(j["verifications"].size() == 4);
    for (const auto& rec : j["verifications"]) {
        CHECK(rec["n"] == 1);
        CHECK(rec["result"] == "confirmed");
    }
    CHECK(contains(run({"verify", "--ring", "gaussian", "--omega", "1+1*i",
                        "--omega-prime", "1-1*i", "--k", "4", "--n", "1"})
                       .out,
                   "verification [ee, k=4, n=1, ring]: confirmed"));
}

TEST_CASE("verify skips the symbolic check beyond the budget") {
    CliResult r = run({"verify", "--ring", "gaussian", "--omega", "2+1*i",
                       "--omega-prime", "1-2*i", "--k", "7", "--format",
                       "json"});
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["verifications"].size() == 2);
    for (const auto& rec : j["verifications"]) {
        CHECK(rec["method"] == "ring");
        CHECK(rec["result"] == "refuted");
    }
}

TEST_CASE("orbit subcommand") {
    CliResult r = run({"orbit", "--ring", "eisenstein", "--omega", "2",
                       "--point", "0,1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "start: 0,1"));
    CHECK(contains(r.out, "pre-periodic: yes"));
    CHECK(contains(r.out, "pair: (0, 2)"));

    CliResult rg = run({"orbit", "--ring", "gaussian", "--omega", "1+1*i",
                        "--point", "0,0", "--format", "json"});
    CHECK(rg.code == 0);
    nlohmann::json j = nlohmann::json::parse(rg.out);
    CHECK(j["orbit"]["preperiodic"] == true);
    CHECK(j["orbit"]["n"] == 1);
    CHECK(j["orbit"]["k"] == 1);

    CliResult ri = run({"orbit", "--ring", "gaussian", "--omega", "2+1*i",
                        "--point", "inf"});
    CHECK(ri.code == 0);
    CHECK(contains(ri.out, "pair: (0, 1)"));
}

TEST_CASE("orbit respects --max-steps") {
    // doubling from (2,3) first revisits a point at the third step
    CliResult r = run({"orbit", "--ring", "eisenstein", "--omega", "2",
                       "--point", "2,3", "--max-steps", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "pre-periodic: not detected within 2 steps"));

    CliResult r3 = run({"orbit", "--ring", "eisenstein", "--omega", "2",
                        "--point", "2,3", "--max-steps", "3"});
    CHECK(contains(r3.out, "pair: (1, 2)"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"decide", "--ring", "gaussian", "--omega-prime", "1-2*i"}).code ==
          2);
    CHECK(run({"decide", "--ring", "quaternion", "--omega", "1",
               "--omega-prime", "1"})
              .code == 2);
    CHECK(run({"decide", "--ring", "gaussian", "--omega", "2+*i",
               "--omega-prime", "1"})
              .code == 2);
    CHECK(run({"decide", "--ring", "gaussian", "--B", "2", "--omega", "1",
               "--omega-prime", "1"})
              .code == 2);
    CHECK(run({"decide", "--ring", "eisenstein", "--A", "2", "--omega", "1",
               "--omega-prime", "1"})
              .code == 2);
    CHECK(run({"decide", "--ring", "gaussian", "--omega", "0",
               "--omega-prime", "1"})
              .code == 2);
    CHECK(run({"decide", "--ring", "eisenstein", "--omega", "1+1*i",
               "--omega-prime", "1"})
              .code == 2);
    CHECK(run({"orbit", "--ring", "gaussian", "--omega", "2", "--point",
               "1,1"})
              .code == 2);
    CHECK(run({"verify", "--ring", "gaussian", "--omega", "2+1*i",
               "--omega-prime", "1-2*i", "--k", "0"})
              .code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("budget errors exit 3") {
    CliResult r = run({"endo", "--ring", "gaussian", "--omega", "10",
                       "--degree-budget", "50"});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "degree budget exceeded"));
    CHECK(run({"lattes", "--ring", "gaussian", "--omega", "10",
               "--degree-budget", "50"})
              .code == 3);
}

TEST_CASE("--help exits 0") {
    CliResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "decide"));
    CHECK(contains(r.out, "orbit"));
}

TEST_CASE("element grammar accepts products and leading signs") {
    CliResult r = run({"decide", "--ring", "eisenstein", "--omega",
                       "(1+2*w)*w", "--omega-prime", "1+2*w"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "minimal pair (0, 3)"));

    CliResult r2 = run({"decide", "--ring", "gaussian", "--omega=-1+2*i",
                        "--omega-prime", "2+1*i"});
    CHECK(r2.code == 0);
    CHECK(contains(r2.out, "quotient = sqrt(-1)"));
    CHECK(contains(r2.out, "minimal pair (0, 4)"));
}

TEST_CASE("printed ring elements re-parse to the same value") {
    std::mt19937_64 rng(77007);
    std::uniform_int_distribution<long> d(-40, 40);
    for (RingId ring : {RingId::gaussian, RingId::eisenstein}) {
        for (int i = 0; i < 200; ++i) {
            QuadInt q{ring, d(rng), d(rng)};
            CHECK(parse_quadint(ring, to_string(q)) == q);
        }
        std::uniform_int_distribution<long> den(1, 7);
        for (int i = 0; i < 200; ++i) {
            KNum z{ring, frac(d(rng), den(rng)), frac(d(rng), den(rng))};
            CHECK(parse_knum(ring, to_string(z)) == z);
        }
    }
}

TEST_CASE("printed maps and points re-parse to the same value") {
    for (RingId ring : {RingId::gaussian, RingId::eisenstein}) {
        Curve c = ring == RingId::gaussian ? Curve::gaussian_default()
                                           : Curve::eisenstein_default();
        for (long a = -2; a <= 2; ++a) {
            for (long b = -2; b <= 2; ++b) {
                QuadInt w{ring, a, b};
                if (w.is_zero() || norm(w) > 5) continue;
                RatFunc m = lattes::lattes(c, w).map;
                CHECK(parse_ratfunc(ring, to_string(m)) == m);
                Endo e = endo_from_quadint(c, w);
                CHECK(parse_ratfunc(ring, to_string(e.Y())) == e.Y());
            }
        }
        for (const Point& p : fx::curve_points(ring)) {
            Point back = parse_point(ring, to_string(p));
            CHECK(back == p);
        }
    }
}
