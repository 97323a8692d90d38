#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "cauchykit/errors.hpp"
#include "cauchykit/identity.hpp"
#include "cauchykit/report_io.hpp"

using namespace cauchykit;
using nlohmann::json;

namespace {

PointVector parse_points(const std::string& text) {
    PointVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InvalidConfig("empty entry in point list '" + text + "'");
        out.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw InvalidConfig("empty point list");
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

struct OutputOpts {
    std::string format = "table";
    bool log_terms = false;
};

void print_report(const IdentityReport& rep, const OutputOpts& opts) {
    const bool exact = rep.mode == EvalMode::ExactTruncated;
    std::string lhs = exact ? rep.lhs_exact->str() : fmt_double(*rep.lhs_value);
    std::string rhs = exact ? rep.rhs_exact->str() : fmt_double(*rep.rhs_value);
    std::string residual = exact ? rep.residual_exact->str() : fmt_double(*rep.residual_value);

    if (opts.format == "json") {
        std::cout << report_to_json(rep, opts.log_terms).dump(2) << "\n";
        return;
    }
    if (opts.format == "csv") {
        std::cout << "mode,order,partition_count,lhs,rhs,residual,verdict\n";
        std::cout << to_string(rep.mode) << "," << rep.order << "," << rep.partition_count << ","
                  << csv_field(lhs) << "," << csv_field(rhs) << "," << csv_field(residual) << ","
                  << to_string(rep.verdict) << "\n";
        return;
    }
    std::cout << "mode:            " << to_string(rep.mode) << "\n";
    std::cout << "order:           " << rep.order << "\n";
    std::cout << "partition_count: " << rep.partition_count << "\n";
    std::cout << "lhs:             " << lhs << "\n";
    std::cout << "rhs:             " << rhs << "\n";
    std::cout << "residual:        " << residual << "\n";
    std::cout << "verdict:         " << to_string(rep.verdict) << "\n";
    if (!rep.trace.empty()) {
        std::cout << "trace (k_cap, residual):\n";
        for (const ResidualStep& s : rep.trace)
            std::cout << "  " << s.k_cap << "  " << fmt_double(s.residual) << "\n";
    }
    if (opts.log_terms && !rep.terms.empty()) {
        std::cout << "terms (lambda, staircase, G, C, s_a, s_x, term):\n";
        for (const TermLog& t : rep.terms)
            std::cout << "  " << t.lambda.str() << "  " << join_ints(t.expo) << "  " << t.g.str()
                      << "  " << t.c.str() << "  " << t.s_a.str() << "  " << t.s_x.str() << "  "
                      << t.term.str() << "\n";
    }
}

struct VerifyArgs {
    std::string g_text;
    std::string a_text, x_text;
    std::string mode = "exact";
    int order = -1;
    double tol = 1e-10;
    int k_max = 40;
    int threads = 1;
};

int run_verify(const VerifyArgs& args, const OutputOpts& opts) {
    GenFun g = GenFun::parse(args.g_text);
    PointVector a = parse_points(args.a_text);
    PointVector x = parse_points(args.x_text);

    IdentityReport rep;
    if (args.mode == "exact") {
        if (args.order < 0) throw InvalidConfig("exact mode requires --order");
        EvalConfig cfg = EvalConfig::exact_truncated(std::move(a), std::move(x), args.order);
        rep = verify_truncated(g, cfg, args.order, opts.log_terms, args.threads);
    } else {
        EvalConfig cfg = EvalConfig::analytic(std::move(a), std::move(x), args.tol, args.k_max);
        rep = verify_analytic(g, cfg, opts.log_terms);
    }
    print_report(rep, opts);
    return rep.verdict == Verdict::Fail ? 1 : 0;
}

struct SchurArgs {
    std::string lambda_text;
    std::string x_text;
    bool oracle = false;
};

int run_schur(const SchurArgs& args, const OutputOpts& opts) {
    Partition lam = Partition::parse(args.lambda_text);
    PointVector xs = parse_points(args.x_text);
    Rational value;
    try {
        value = args.oracle ? ssyt_schur_oracle(lam, xs) : bialternant(lam, xs);
    } catch (const RepeatedPoints& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (opts.format == "json") {
        json j{{"lambda", lam.str()}, {"value", value.str()}};
        std::cout << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        std::cout << "lambda,value\n" << csv_field(lam.str()) << "," << csv_field(value.str()) << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

int run_partitions(int n, int k_cap, const OutputOpts& opts) {
    std::vector<Partition> lams = enumerate(n, k_cap);
    if (opts.format == "json") {
        json arr = json::array();
        for (const Partition& lam : lams)
            arr.push_back(json{{"lambda", lam.str()},
                               {"staircase", staircase(lam, n)},
                               {"C", c_lambda(lam, n).str()},
                               {"parity", to_string(parity_class(lam, n))}});
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    if (opts.format == "csv") {
        std::cout << "lambda,staircase,C,parity\n";
        for (const Partition& lam : lams)
            std::cout << csv_field(lam.str()) << "," << csv_field(join_ints(staircase(lam, n)))
                      << "," << c_lambda(lam, n).str() << "," << to_string(parity_class(lam, n))
                      << "\n";
        return 0;
    }
    for (const Partition& lam : lams)
        std::cout << lam.str() << "  " << join_ints(staircase(lam, n)) << "  C="
                  << c_lambda(lam, n).str() << "  " << to_string(parity_class(lam, n)) << "\n";
    return 0;
}

int run_audit(const std::string& example, int n, long max_weight, bool strict,
              const OutputOpts& opts) {
    auto id = audit_example_from_string(example);
    if (!id) throw InvalidConfig("unknown example id '" + example + "'");
    std::vector<AuditRecord> recs = audit_example(*id, n, enumerate_max_weight(n, max_weight));
    bool all_match = true;
    for (const AuditRecord& r : recs) all_match = all_match && r.match;

    if (opts.format == "json") {
        std::cout << audit_to_json(recs).dump(2) << "\n";
    } else if (opts.format == "csv") {
        std::cout << "example,lambda,claimed,computed,match\n";
        for (const AuditRecord& r : recs)
            std::cout << to_string(r.example) << "," << csv_field(r.lambda.str()) << ","
                      << csv_field(r.claimed.str()) << "," << csv_field(r.computed.str()) << ","
                      << (r.match ? "true" : "false") << "\n";
    } else {
        for (const AuditRecord& r : recs)
            std::cout << to_string(r.example) << "  " << r.lambda.str() << "  claimed="
                      << r.claimed.str() << "  computed=" << r.computed.str() << "  "
                      << (r.match ? "match" : "MISMATCH") << "\n";
    }
    return strict && !all_match ? 1 : 0;
}

int run_series(const std::string& g_text, int order, const OutputOpts& opts) {
    if (order < 0) throw InvalidConfig("--order must be nonnegative");
    GenFun g = GenFun::parse(g_text);
    SeriesTrunc s = g.series(order);
    if (opts.format == "json") {
        json coeffs = json::array();
        for (const Rational& c : s.coeffs) coeffs.push_back(c.str());
        json j{{"g", g.source()},
               {"radius", g.radius().str()},
               {"parity", to_string(g.parity())},
               {"coeffs", std::move(coeffs)}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (opts.format == "csv") {
        std::cout << "k,coeff\n";
        for (int k = 0; k <= order; ++k) std::cout << k << "," << csv_field(s.at(k).str()) << "\n";
        return 0;
    }
    std::cout << "g: " << g.source() << "  radius: " << g.radius().str()
              << "  parity: " << to_string(g.parity()) << "\n";
    for (int k = 0; k <= order; ++k) std::cout << k << "  " << s.at(k).str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cauchykit: exact evaluation and verification of Cauchy-type collocation identities"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may appear after the subcommand

    OutputOpts opts;
    app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed reserved for randomized runs; recorded only");

    int exit_code = 0;

    VerifyArgs vargs;
    auto* verify = app.add_subcommand("verify", "verify the partition-sum identity for g at (a, x)");
    verify->add_option("--g", vargs.g_text, "generating function expression")->required();
    verify->add_option("--a", vargs.a_text, "comma-separated rational a points")->required();
    verify->add_option("--x", vargs.x_text, "comma-separated rational x points")->required();
    verify->add_option("--mode", vargs.mode, "exact | analytic")->check(CLI::IsMember({"exact", "analytic"}));
    verify->add_option("--order", vargs.order, "truncation degree m (exact mode)");
    verify->add_option("--tol", vargs.tol, "residual tolerance (analytic mode)");
    verify->add_option("--kmax", vargs.k_max, "partition budget cap (analytic mode)");
    verify->add_option("--threads", vargs.threads, "parallel term evaluation (exact mode)");
    verify->add_flag("--log-terms", opts.log_terms, "include the per-partition term log");
    verify->callback([&] { exit_code = run_verify(vargs, opts); });

    SchurArgs sargs;
    auto* schur = app.add_subcommand("schur", "evaluate a Schur polynomial at rational points");
    schur->add_option("--lambda", sargs.lambda_text, "partition, e.g. [2,1]")->required();
    schur->add_option("--x", sargs.x_text, "comma-separated rational points")->required();
    schur->add_flag("--oracle", sargs.oracle, "use tableau enumeration instead of the bialternant");
    schur->callback([&] { exit_code = run_schur(sargs, opts); });

    int pn = 1, pkcap = 0;
    auto* parts = app.add_subcommand("partitions", "list partitions with staircase bound k_cap");
    parts->add_option("--n", pn, "number of variables")->required();
    parts->add_option("--kcap", pkcap, "staircase exponent cap")->required();
    parts->callback([&] { exit_code = run_partitions(pn, pkcap, opts); });

    std::string aex;
    int an = 1;
    long amw = 6;
    bool astrict = false;
    auto* audit = app.add_subcommand("audit", "compare printed closed-form coefficients against derivatives");
    audit->add_option("--example", aex, "geomsq | geomsqneg | exp | sinh | sin | log")->required();
    audit->add_option("--n", an, "number of variables")->required();
    audit->add_option("--maxweight", amw, "partition weight bound");
    audit->add_flag("--strict", astrict, "exit 1 when any record mismatches");
    audit->callback([&] { exit_code = run_audit(aex, an, amw, astrict, opts); });

    std::string gts;
    int sorder = 8;
    auto* series = app.add_subcommand("series", "print Maclaurin coefficients of a parsed g");
    series->add_option("--g", gts, "generating function expression")->required();
    series->add_option("--order", sorder, "highest coefficient index");
    series->callback([&] { exit_code = run_series(gts, sorder, opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
