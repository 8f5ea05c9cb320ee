#include "run.hpp"

#include <ostream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lattes/dynamics.hpp"
#include "lattes/text.hpp"

namespace lattes::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

RingId ring_from(const std::string& name) {
    return name == "gaussian" ? RingId::gaussian : RingId::eisenstein;
}

struct Common {
    std::string ring;
    std::string a_text = "1";
    std::string b_text = "1";
    long budget = kDefaultDegreeBudget;
    std::string format = "human";
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--ring", c.ring, "coefficient ring")
        ->required()
        ->check(CLI::IsMember({"gaussian", "eisenstein"}));
    sub->add_option("--A", c.a_text,
                    "coefficient A of y^2 = x^3 + Ax (gaussian ring only)");
    sub->add_option("--B", c.b_text,
                    "coefficient B of y^2 = x^3 + B (eisenstein ring only)");
    sub->add_option("--degree-budget", c.budget,
                    "largest map degree the symbolic engine may build")
        ->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
}

Curve build_curve(const CLI::App* sub, const Common& c) {
    RingId ring = ring_from(c.ring);
    bool a_given = sub->count("--A") > 0;
    bool b_given = sub->count("--B") > 0;
    if (ring == RingId::gaussian) {
        if (b_given) {
            throw ParseError(
                "--B does not apply to the gaussian curve y^2 = x^3 + Ax");
        }
        return Curve(ring, parse_knum(ring, c.a_text), KNum::zero(ring));
    }
    if (a_given) {
        throw ParseError(
            "--A does not apply to the eisenstein curve y^2 = x^3 + B");
    }
    return Curve(ring, KNum::zero(ring), parse_knum(ring, c.b_text));
}

ordered_json request_json(const char* subcommand, const Common& com,
                          const Curve& c) {
    ordered_json j;
    j["subcommand"] = subcommand;
    j["ring"] = com.ring;
    j["curve"] = to_string(c);
    j["degree_budget"] = com.budget;
    return j;
}

struct VerRecord {
    Level level;
    long k;
    long n;
    const char* method;
    VerifyOutcome result;
};

VerifyOutcome ring_check_with_n(Level level, const QuadInt& w,
                                const QuadInt& wp, long k, long n) {
    if (n == 0) return verify_pair_ring(level, w, wp, k);
    QuadInt lhs = pow(wp, static_cast<unsigned long>(n)) *
                  pow(w, static_cast<unsigned long>(k));
    QuadInt rhs = pow(wp, static_cast<unsigned long>(n + k));
    bool same = lhs == rhs;
    if (level == Level::p1) same = same || lhs == -rhs;
    return same ? VerifyOutcome::confirmed : VerifyOutcome::refuted;
}

// Default policy: the ring check always runs; the symbolic check runs only
// when the composed degree fits the budget.
void run_level(std::vector<VerRecord>& out, const Curve& c, const QuadInt& w,
               const QuadInt& wp, Level level, long k, long n, long budget,
               SymbolicWorkspace& ws) {
    out.push_back({level, k, n, "ring", ring_check_with_n(level, w, wp, k, n)});
    try {
        VerifyOutcome sym = verify_pair_symbolic(level, c, w, wp, k, n, budget, &ws);
        out.push_back({level, k, n, "symbolic", sym});
    } catch (const DegreeBudgetExceeded&) {
    }
}

ordered_json level_json(const LevelStatus& s) {
    ordered_json j;
    j["preperiodic"] = s.preperiodic;
    if (s.minimal_k) {
        j["k"] = *s.minimal_k;
    } else {
        j["k"] = nullptr;
    }
    return j;
}

ordered_json records_json(const std::vector<VerRecord>& recs) {
    ordered_json arr = ordered_json::array();
    for (const VerRecord& r : recs) {
        ordered_json o;
        o["level"] = level_name(r.level);
        o["k"] = r.k;
        if (r.n > 0) o["n"] = r.n;
        o["method"] = r.method;
        o["result"] = outcome_name(r.result);
        arr.push_back(std::move(o));
    }
    return arr;
}

void print_status_line(std::ostream& out, const char* label,
                       const LevelStatus& s) {
    out << label << ": ";
    if (s.preperiodic) {
        out << "pre-periodic, minimal pair (0, " << *s.minimal_k << ")";
    } else {
        out << "not pre-periodic";
    }
    out << "\n";
}

void print_records(std::ostream& out, const std::vector<VerRecord>& recs) {
    for (const VerRecord& r : recs) {
        out << "verification [" << level_name(r.level) << ", k=" << r.k;
        if (r.n > 0) out << ", n=" << r.n;
        out << ", " << r.method << "]: " << outcome_name(r.result) << "\n";
    }
}

void print_verdict_human(std::ostream& out, const Curve& c, const QuadInt& w,
                         const QuadInt& wp, const Verdict& v,
                         const std::vector<VerRecord>& recs) {
    out << "curve: " << to_string(c) << "\n";
    out << "omega = " << to_string(w) << ", omega' = " << to_string(wp)
        << ", quotient = " << to_string(v.quotient) << "\n";
    print_status_line(out, "diagonal in E x E", v.ee);
    print_status_line(out, "diagonal in P1 x P1", v.p1);
    out << "note: " << v.note << "\n";
    print_records(out, recs);
}

int do_decide(std::ostream& out, const CLI::App* sub, const Common& com,
              const std::string& w_text, const std::string& wp_text) {
    RingId ring = ring_from(com.ring);
    Curve c = build_curve(sub, com);
    QuadInt w = parse_quadint(ring, w_text);
    QuadInt wp = parse_quadint(ring, wp_text);
    Verdict v = decide_diagonal(w, wp);
    std::vector<VerRecord> recs;
    SymbolicWorkspace ws;
    if (v.ee.preperiodic) {
        run_level(recs, c, w, wp, Level::ee, *v.ee.minimal_k, 0, com.budget, ws);
        run_level(recs, c, w, wp, Level::p1, *v.p1.minimal_k, 0, com.budget, ws);
    }
    if (com.format == "json") {
        ordered_json j;
        j["request"] = request_json("decide", com, c);
        j["request"]["omega"] = to_string(w);
        j["request"]["omega_prime"] = to_string(wp);
        j["quotient"] = to_string(v.quotient);
        j["ee"] = level_json(v.ee);
        j["p1"] = level_json(v.p1);
        j["verifications"] = records_json(recs);
        out << j.dump(2) << "\n";
    } else {
        print_verdict_human(out, c, w, wp, v, recs);
    }
    return 0;
}

int do_verify(std::ostream& out, const CLI::App* sub, const Common& com,
              const std::string& w_text, const std::string& wp_text, long k,
              long n, const std::string& level_s,
              const std::string& expect_s) {
    RingId ring = ring_from(com.ring);
    Curve c = build_curve(sub, com);
    QuadInt w = parse_quadint(ring, w_text);
    QuadInt wp = parse_quadint(ring, wp_text);
    Verdict v = decide_diagonal(w, wp);
    std::vector<Level> levels;
    if (level_s.empty()) {
        levels = {Level::ee, Level::p1};
    } else {
        levels = {level_s == "ee" ? Level::ee : Level::p1};
    }
    std::vector<VerRecord> recs;
    SymbolicWorkspace ws;
    for (Level level : levels) {
        run_level(recs, c, w, wp, level, k, n, com.budget, ws);
    }
    bool all_confirmed = true;
    for (const VerRecord& r : recs) {
        all_confirmed = all_confirmed && r.result == VerifyOutcome::confirmed;
    }
    if (com.format == "json") {
        ordered_json j;
        j["request"] = request_json("verify", com, c);
        j["request"]["omega"] = to_string(w);
        j["request"]["omega_prime"] = to_string(wp);
        j["request"]["k"] = k;
        if (n > 0) j["request"]["n"] = n;
        if (!level_s.empty()) j["request"]["level"] = level_s;
        j["quotient"] = to_string(v.quotient);
        j["ee"] = level_json(v.ee);
        j["p1"] = level_json(v.p1);
        j["verifications"] = records_json(recs);
        out << j.dump(2) << "\n";
    } else {
        print_verdict_human(out, c, w, wp, v, recs);
        out << "overall: "
            << (all_confirmed ? "confirmed" : "refuted") << "\n";
    }
    if (!expect_s.empty()) {
        bool expected_confirmed = expect_s == "confirmed";
        if (expected_confirmed != all_confirmed) return 1;
    }
    return 0;
}

int do_endo(std::ostream& out, const CLI::App* sub, const Common& com,
            const std::string& w_text) {
    RingId ring = ring_from(com.ring);
    Curve c = build_curve(sub, com);
    QuadInt w = parse_quadint(ring, w_text);
    Endo e = endo_from_quadint(c, w, com.budget);
    if (com.format == "json") {
        ordered_json j;
        j["request"] = request_json("endo", com, c);
        j["request"]["omega"] = to_string(w);
        if (e.is_zero()) {
            j["X"] = nullptr;
            j["Y"] = nullptr;
        } else {
            j["X"] = to_string(e.X());
            j["Y"] = to_string(e.Y());
        }
        j["degree"] = e.degree();
        out << j.dump(2) << "\n";
    } else {
        out << "curve: " << to_string(c) << "\n";
        if (e.is_zero()) {
            out << "the zero map (everything to the point at infinity)\n";
        } else {
            out << "X: " << to_string(e.X()) << "\n";
            out << "Y: " << to_string(e.Y()) << "\n";
        }
        out << "degree: " << e.degree() << "\n";
    }
    return 0;
}

int do_lattes(std::ostream& out, const CLI::App* sub, const Common& com,
              const std::string& w_text) {
    RingId ring = ring_from(com.ring);
    Curve c = build_curve(sub, com);
    QuadInt w = parse_quadint(ring, w_text);
    LattesMap m = lattes(c, w, com.budget);
    if (com.format == "json") {
        ordered_json j;
        j["request"] = request_json("lattes", com, c);
        j["request"]["omega"] = to_string(w);
        j["map"] = to_string(m.map);
        j["degree"] = m.map.degree();
        out << j.dump(2) << "\n";
    } else {
        out << "curve: " << to_string(c) << "\n";
        out << "map: " << to_string(m.map) << "\n";
        out << "degree: " << m.map.degree() << "\n";
    }
    return 0;
}

int do_orbit(std::ostream& out, const CLI::App* sub, const Common& com,
             const std::string& w_text, const std::string& point_text,
             long max_steps) {
    RingId ring = ring_from(com.ring);
    Curve c = build_curve(sub, com);
    QuadInt w = parse_quadint(ring, w_text);
    Point p = parse_point(ring, point_text);
    Endo e = endo_from_quadint(c, w, com.budget);
    OrbitResult r = orbit_detect(c, e, p, max_steps);
    if (com.format == "json") {
        ordered_json j;
        j["request"] = request_json("orbit", com, c);
        j["request"]["omega"] = to_string(w);
        j["request"]["point"] = to_string(p);
        j["request"]["max_steps"] = max_steps;
        ordered_json o;
        o["preperiodic"] = r.pair.has_value();
        if (r.pair) {
            o["n"] = r.pair->n;
            o["k"] = r.pair->k;
        } else {
            o["n"] = nullptr;
            o["k"] = nullptr;
        }
        o["steps"] = r.steps;
        j["orbit"] = std::move(o);
        out << j.dump(2) << "\n";
    } else {
        out << "curve: " << to_string(c) << "\n";
        out << "start: " << to_string(p) << "\n";
        if (r.pair) {
            out << "pre-periodic: yes\n";
            out << "pair: (" << r.pair->n << ", " << r.pair->k << ")\n";
            out << "steps: " << r.steps << "\n";
        } else {
            out << "pre-periodic: not detected within " << r.steps
                << " steps\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "exact CM endomorphisms, Lattes maps, and diagonal pre-periodicity"};
    app.require_subcommand(1);

    Common decide_com;
    std::string decide_w, decide_wp;
    CLI::App* decide = app.add_subcommand(
        "decide", "decide pre-periodicity of the diagonal for a pair");
    add_common(decide, decide_com);
    decide->add_option("--omega", decide_w, "first multiplier")->required();
    decide->add_option("--omega-prime", decide_wp, "second multiplier")
        ->required();

    Common verify_com;
    std::string verify_w, verify_wp, verify_level, verify_expect;
    long verify_k = 0;
    long verify_n = 0;
    CLI::App* verify = app.add_subcommand(
        "verify", "verify a pre-periodicity pair at a given k");
    add_common(verify, verify_com);
    verify->add_option("--omega", verify_w, "first multiplier")->required();
    verify->add_option("--omega-prime", verify_wp, "second multiplier")
        ->required();
    verify->add_option("--k", verify_k, "period to verify")->required();
    verify->add_option("--n", verify_n, "extra pre-period iterations")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--level", verify_level, "restrict to one level")
        ->check(CLI::IsMember({"ee", "p1"}));
    verify->add_option("--expect", verify_expect,
                       "assert the outcome; mismatch exits 1")
        ->check(CLI::IsMember({"confirmed", "refuted"}));

    Common endo_com;
    std::string endo_w;
    CLI::App* endo = app.add_subcommand(
        "endo", "print the endomorphism of a multiplier as rational maps");
    add_common(endo, endo_com);
    endo->add_option("--omega", endo_w, "multiplier")->required();

    Common lattes_com;
    std::string lattes_w;
    CLI::App* lat = app.add_subcommand(
        "lattes", "print the Lattes map of a multiplier on the x-line");
    add_common(lat, lattes_com);
    lat->add_option("--omega", lattes_w, "multiplier")->required();

    Common orbit_com;
    std::string orbit_w, orbit_point;
    long orbit_steps = 64;
    CLI::App* orbit = app.add_subcommand(
        "orbit", "iterate a point and detect its pre-periodic pair");
    add_common(orbit, orbit_com);
    orbit->add_option("--omega", orbit_w, "multiplier")->required();
    orbit->add_option("--point", orbit_point, "starting point, \"x,y\" or inf")
        ->required();
    orbit->add_option("--max-steps", orbit_steps, "iteration cutoff")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (decide->parsed()) {
            return do_decide(out, decide, decide_com, decide_w, decide_wp);
        }
        if (verify->parsed()) {
            return do_verify(out, verify, verify_com, verify_w, verify_wp,
                             verify_k, verify_n, verify_level, verify_expect);
        }
        if (endo->parsed()) return do_endo(out, endo, endo_com, endo_w);
        if (lat->parsed()) return do_lattes(out, lat, lattes_com, lattes_w);
        if (orbit->parsed()) {
            return do_orbit(out, orbit, orbit_com, orbit_w, orbit_point,
                            orbit_steps);
        }
    } catch (const DegreeBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace lattes::cli
