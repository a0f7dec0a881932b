#include "cli.hpp"

#include <CLI11.hpp>
#include <regex>
#include <sstream>

#include "forge/anomaly.hpp"
#include "forge/construction.hpp"
#include "forge/io.hpp"
#include "forge/sampling.hpp"

namespace forge::cli {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalidInput = 2;

struct CliConfig {
    std::string a = "0";
    std::string b = "0";
    std::string format = "tsv";
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    // ascend
    std::string x_range = "1..20";
    unsigned rational_height = 0;
    bool skip_trivial = false;
    // scan
    std::string mode = "anomalous";
    std::uint64_t max_l = 500;
    std::string residue_class = "all";
    // verify
    unsigned random_curves = 0;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
    bool json;
};

std::string join_primes(const std::set<Int>& primes) {
    std::string s = "{";
    bool first = true;
    for (const auto& p : primes) {
        if (!first) s += ',';
        first = false;
        s += to_string(p);
    }
    return s + "}";
}

std::string point_text(const LiftedPoint& point, bool coordinate_x) {
    return std::visit(
        [&](const auto& P) -> std::string {
            if (P.is_infinity()) return "O";
            return format(coordinate_x ? P.x() : P.y());
        },
        point);
}

int cmd_poly(const Curve& E, const Io& io) {
    const ConstructionPoly cp = build_polynomial(E);
    const Rat disc = discriminant(cp.P);
    const ExceptionSet exc = exception_set(E);
    if (io.json) {
        io::json exceptions = io::json::array();
        for (const auto& p : exc.primes) exceptions.push_back(io::int_json(p));
        io.out << io::json{{"P", io::to_json(cp.P)},
                           {"P_text", format(cp.P)},
                           {"branch", to_string(cp.branch)},
                           {"discriminant", to_string(disc)},
                           {"exceptions", exceptions}}
                      .dump()
               << '\n';
    } else {
        io.out << "P\t" << format(cp.P) << '\n'
               << "branch\t" << to_string(cp.branch) << '\n'
               << "discriminant\t" << to_string(disc) << '\n'
               << "exceptions\t" << join_primes(exc.primes) << '\n';
    }
    return kOk;
}

ParamSpec parse_range(const CliConfig& cfg) {
    if (cfg.rational_height > 0) return ParamSpec::rationals(cfg.rational_height);
    static const std::regex range_re(R"((-?\d+)\.\.(-?\d+))");
    std::smatch m;
    if (!std::regex_match(cfg.x_range, m, range_re)) {
        fail(ErrorKind::InvalidInput, "--x expects A..B, got '" + cfg.x_range + "'");
    }
    const Int lo(m[1].str(), 10), hi(m[2].str(), 10);
    if (lo > hi) fail(ErrorKind::InvalidInput, "empty range " + cfg.x_range);
    return ParamSpec::integers(lo, hi);
}

int cmd_ascend(const Curve& E, const CliConfig& cfg, const Io& io) {
    const AscentRun run = ascend_range(E, parse_range(cfg), cfg.jobs);
    for (const auto& s : run.skipped) io.err << "notice: skipped x = " << to_string(s.x) << ": " << s.notice << '\n';
    if (!io.json) io.out << "x\tm_x\tm0\tc\tpoint_x\tpoint_y\ton_curve\tverdict\tanomalous_divisors\n";
    unsigned emitted = 0, infinite = 0, trivial = 0;
    bool all_on_curve = true;
    for (const auto& rec : run.records) {
        all_on_curve = all_on_curve && rec.on_curve;
        if (rec.trivial_class()) ++trivial;
        if (rec.trivial_class() && cfg.skip_trivial) continue;
        ++emitted;
        if (rec.verdict.infinite()) ++infinite;
        if (io.json) {
            io.out << io::to_json(rec).dump() << '\n';
            continue;
        }
        std::string divisors;
        for (const auto& d : rec.anomalous_divisors) {
            if (!divisors.empty()) divisors += ',';
            divisors += to_string(d.prime) + ":" +
                        (d.exceptional ? "exceptional" : d.anomalous ? "anomalous" : "ordinary");
        }
        io.out << to_string(rec.x) << '\t' << to_string(rec.m_x) << '\t' << to_string(rec.cube_class.m0) << '\t'
               << to_string(rec.cube_class.c) << '\t' << point_text(rec.point, true) << '\t'
               << point_text(rec.point, false) << '\t' << (rec.on_curve ? "true" : "false") << '\t'
               << format(rec.verdict) << '\t' << (divisors.empty() ? "-" : divisors) << '\n';
    }
    io.err << "records=" << emitted << " distinct_m0=" << run.distinct_m0.size() << " infinite_order=" << infinite
           << " trivial_class=" << trivial << " skipped=" << run.skipped.size() << '\n';
    return all_on_curve ? kOk : kCheckFailed;
}

ResidueClass parse_class(const std::string& s) {
    if (s == "all") return ResidueClass::All;
    if (s == "2mod3") return ResidueClass::TwoMod3;
    if (s == "1mod3") return ResidueClass::OneMod3;
    fail(ErrorKind::InvalidInput, "--class expects all, 2mod3 or 1mod3");
}

int cmd_scan(const Curve& E, const CliConfig& cfg, const Io& io) {
    const ResidueClass cls = parse_class(cfg.residue_class);
    auto tf = [](bool v) { return v ? "true" : "false"; };
    if (cfg.mode == "anomalous") {
        const auto rows = anomalous_scan(E, cfg.max_l, cls, cfg.jobs);
        if (!io.json) io.out << "l\tcount\ttrace\tanomalous\n";
        unsigned anomalous = 0;
        for (const auto& r : rows) {
            anomalous += r.anomalous ? 1 : 0;
            if (io.json) {
                io.out << io::to_json(r).dump() << '\n';
            } else {
                io.out << r.ell << '\t' << r.count << '\t' << r.trace << '\t' << tf(r.anomalous) << '\n';
            }
        }
        io.err << "primes=" << rows.size() << " anomalous=" << anomalous << '\n';
        return kOk;
    }
    if (cfg.mode == "correlate") {
        const CorrelationReport report = correlation_scan(E, cfg.max_l, cls, cfg.jobs);
        if (!io.json) io.out << "l\thas_root\tanomalous\tagree\n";
        for (const auto& r : report.rows) {
            if (io.json) {
                io.out << io::to_json(r).dump() << '\n';
            } else {
                io.out << r.ell << '\t' << tf(r.has_root) << '\t' << tf(r.anomalous) << '\t' << tf(r.agree) << '\n';
            }
        }
        io.err << "primes=" << report.rows.size() << " mismatches=" << report.mismatches
               << " p_status=" << to_string(report.p_status)
               << (report.one_directional_only() ? " (one-directional only)" : "") << '\n';
        if (report.mismatches > 0) {
            for (const auto& r : report.rows) {
                if (!r.agree) io.err << "mismatch: l=" << r.ell << '\n';
            }
        }
        return report.mismatches > 0 && !report.one_directional_only() ? kCheckFailed : kOk;
    }
    if (cfg.mode == "patterns") {
        const auto rows = degree_pattern_scan(E, cfg.max_l, cls, cfg.jobs);
        if (!io.json) io.out << "l\tpattern\n";
        std::map<DegreePattern, unsigned> tally;
        for (const auto& r : rows) {
            ++tally[r.pattern];
            if (io.json) {
                io.out << io::to_json(r).dump() << '\n';
            } else {
                io.out << r.ell << '\t' << format(r.pattern) << '\n';
            }
        }
        io.err << "primes=" << rows.size() << " distinct_patterns=" << tally.size();
        for (const auto& [pattern, n] : tally) io.err << ' ' << format(pattern) << 'x' << n;
        io.err << '\n';
        return kOk;
    }
    fail(ErrorKind::InvalidInput, "--mode expects anomalous, correlate or patterns");
}

int cmd_verify(const Curve& E, const CliConfig& cfg, const Io& io) {
    bool ok = true;
    auto line = [&](const std::string& name, bool pass, const std::string& detail) {
        ok = ok && pass;
        if (io.json) {
            io.out << io::json{{"check", name}, {"pass", pass}, {"detail", detail}}.dump() << '\n';
        } else {
            io.out << name << '\t' << (pass ? "pass" : "FAIL") << (detail.empty() ? "" : "\t" + detail) << '\n';
        }
    };
    line("phi-identity", verify_phi_identity(E), "");
    line("psi3-identity", verify_psi3_identity(E), "");
    if (E.a() == 0) {
        io.err << "notice: disc-formula skipped (a = 0)\n";
    } else {
        const DiscFormulaCheck c = check_disc_formula(E);
        std::string detail = "computed=" + to_string(c.computed) + " stated=" + to_string(c.predicted);
        if (c.fitted_exponent) detail += " fitted_exponent=" + std::to_string(*c.fitted_exponent);
        line("disc-formula", c.matches, detail);
    }
    if (cfg.random_curves > 0) {
        Sampler sampler(cfg.seed);
        for (Branch branch : {Branch::Generic, Branch::SpecialAZero}) {
            unsigned phi = 0, psi = 0;
            for (unsigned i = 0; i < cfg.random_curves; ++i) {
                const Curve C = sampler.curve(50, branch);
                phi += verify_phi_identity(C) ? 1 : 0;
                psi += verify_psi3_identity(C) ? 1 : 0;
            }
            const std::string suffix = std::string("-") + std::string(to_string(branch));
            const std::string n = std::to_string(cfg.random_curves);
            line("random-phi-identity" + suffix, phi == cfg.random_curves, std::to_string(phi) + "/" + n);
            line("random-psi3-identity" + suffix, psi == cfg.random_curves, std::to_string(psi) + "/" + n);
        }
    }
    return ok ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--a", cfg.a, "coefficient a (p/q)")->required();
    sub->add_option("--b", cfg.b, "coefficient b (p/q)")->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--seed", cfg.seed, "random seed");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"forge: points on elliptic curves over pure cubic fields"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* poly = app.add_subcommand("poly", "slope polynomial, its discriminant and exception primes");
    add_common(poly, cfg);

    auto* ascend = app.add_subcommand("ascend", "lift parameters to points over cubic fields");
    add_common(ascend, cfg);
    ascend->add_option("--x", cfg.x_range, "integer parameter range A..B");
    ascend->add_option("--rational-height", cfg.rational_height, "enumerate p/q with |p|, q <= H instead");
    ascend->add_flag("--skip-trivial", cfg.skip_trivial, "omit parameters whose cube class is trivial");

    auto* scan = app.add_subcommand("scan", "prime scans");
    add_common(scan, cfg);
    scan->add_option("--mode", cfg.mode, "anomalous | correlate | patterns")
        ->check(CLI::IsMember({"anomalous", "correlate", "patterns"}));
    scan->add_option("--max-l", cfg.max_l, "largest prime scanned")->check(CLI::Range(2ull, 100000ull));
    scan->add_option("--class", cfg.residue_class, "all | 2mod3 | 1mod3")->check(CLI::IsMember({"all", "2mod3", "1mod3"}));

    auto* verify = app.add_subcommand("verify", "check the polynomial identities behind the construction");
    add_common(verify, cfg);
    verify->add_option("--random", cfg.random_curves, "also check N seeded random curves per branch");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        const Curve E(parse_rat_or_throw(cfg.a), parse_rat_or_throw(cfg.b));
        const Io io{out, err, cfg.format == "json"};
        if (poly->parsed()) return cmd_poly(E, io);
        if (ascend->parsed()) return cmd_ascend(E, cfg, io);
        if (scan->parsed()) return cmd_scan(E, cfg, io);
        return cmd_verify(E, cfg, io);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SingularCurve) {
            err << "error: singular curve\n";
            return kInvalidInput;
        }
        if (e.kind() == ErrorKind::WrongBranch) {
            err << "error: generic branch required\n";
            return kInvalidInput;
        }
        err << "error: " << e.what() << '\n';
        const bool math_failure = e.kind() == ErrorKind::InternalError || e.kind() == ErrorKind::OracleExhausted;
        return math_failure ? kCheckFailed : kInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace forge::cli
