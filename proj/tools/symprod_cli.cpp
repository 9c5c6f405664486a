// symprod: exact invariants of symmetric products of punctured Riemann
// surfaces, and pairwise homeomorphism-type verdicts.
//
// Exit codes: 0 success, 1 internal invariant violation, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "symprod/selfcheck.hpp"
#include "symprod/symprod.hpp"

namespace {

using namespace symprod;

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& s) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            long v = std::stol(s);
            return {v, v};
        }
        Range r{std::stol(s.substr(0, pos)), std::stol(s.substr(pos + 2))};
        if (r.lo > r.hi) throw std::invalid_argument("empty range: " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad range '" + s + "': expected N or LO..HI");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("range value out of range: " + s);
    }
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

/// Work estimate for the exterior-algebra Chern/Pontrjagin pipeline:
/// square of the total rank of Lambda^{<=n}(s).
void check_chern_work(const SpaceSpec& spec, long long max_work) {
    Int total = 0;
    for (long q = 0; q <= std::min(spec.n, spec.s()); ++q) total += binomial(spec.s(), q);
    Int work = total * total;
    if (work > Int(static_cast<long>(max_work)))
        throw std::invalid_argument("parameters exceed the work cap (estimated " + work.get_str() +
                                    " > " + std::to_string(max_work) + "); raise --max-work to override");
}

/// Work estimate for tensor-power oracles: n! * (2g+2)^n basis actions.
Int oracle_work(long g, long n) {
    Int w = factorial(n);
    Int base(2 * g + 2);
    for (long i = 0; i < n; ++i) w *= base;
    return w;
}

void check_oracle_work(long g, long n, long long max_work) {
    Int w = oracle_work(g, n);
    if (w > Int(static_cast<long>(max_work)))
        throw std::invalid_argument("oracle work " + w.get_str() + " exceeds the cap " +
                                    std::to_string(max_work) + "; raise --max-work to override");
}

/// Cross-checks behind the --oracle flag: skeleton homology against the
/// binomial betti numbers, the restriction identity for the total Chern
/// class, and the w2 matrix. A mismatch is an internal error.
void run_report_oracle(const SpaceSpec& spec, long long max_work) {
    const long s = spec.s();
    if (s >= 1) {
        HomologySummary h = homology(truncate(torus_cw(static_cast<int>(s)), static_cast<int>(std::min(spec.n, s))));
        if (!h.torsion_free()) throw std::logic_error("skeleton homology has torsion");
        for (long q = 0; q < static_cast<long>(h.h.size()); ++q)
            if (Int(h.h[static_cast<std::size_t>(q)].betti) != binomial(s, q))
                throw std::logic_error("skeleton betti mismatch at degree " + std::to_string(q));
    }
    check_oracle_work(spec.g, spec.n, max_work);
    ChernClosed cc = chern_total_closed(static_cast<int>(spec.g), static_cast<int>(spec.n));
    MacdonaldBasis basis(static_cast<int>(spec.g), static_cast<int>(spec.n));
    ChernPunctured restricted = restrict_chern(cc, static_cast<int>(spec.k), basis);
    ChernPunctured direct =
        chern_total_punctured(static_cast<int>(spec.g), static_cast<int>(spec.k), static_cast<int>(spec.n));
    if (restricted.total != direct.total)
        throw std::logic_error("restriction of the closed total Chern class disagrees with the direct product");
    auto w = stiefel_whitney(direct);
    if (form_of_degree2(w[2]).m != w2_form(static_cast<int>(spec.g), static_cast<int>(spec.k),
                                           static_cast<int>(spec.n)).m)
        throw std::logic_error("w2 matrix disagrees with the closed-form alternating form");
}

struct CliOptions {
    SpaceSpec a, b;
    std::string range_g = "0", range_k = "1", range_n = "2", range_N = "0";
    std::string format = "json";
    std::string out;
    bool oracle = false;
    long long max_work = 10'000'000;
    unsigned long seed = 0;
    long og = 0, on = 2;
    int exit_code = 0;
};

void cmd_report(CliOptions& opt) {
    opt.a.validate();
    check_chern_work(opt.a, opt.max_work);
    if (opt.oracle) run_report_oracle(opt.a, opt.max_work);
    InvariantReport rep = build_report(opt.a);
    write_output(opt.out, render_report(rep, parse_format(opt.format)));
}

void cmd_classify(CliOptions& opt) {
    opt.a.validate();
    opt.b.validate();
    check_chern_work(opt.a, opt.max_work);
    check_chern_work(opt.b, opt.max_work);
    CompareResult cr = compare_specs(opt.a, opt.b);
    InvariantReport ra = build_report(opt.a);
    InvariantReport rb = build_report(opt.b);
    write_output(opt.out, render_classify(ra, rb, cr, parse_format(opt.format)));
}

void cmd_table(CliOptions& opt) {
    Range rg = parse_range(opt.range_g), rk = parse_range(opt.range_k);
    Range rn = parse_range(opt.range_n), rN = parse_range(opt.range_N);
    std::vector<InvariantReport> rows;
    for (long g = rg.lo; g <= rg.hi; ++g)
        for (long k = rk.lo; k <= rk.hi; ++k)
            for (long n = rn.lo; n <= rn.hi; ++n)
                for (long N = rN.lo; N <= rN.hi; ++N) {
                    SpaceSpec spec{g, k, n, N};
                    spec.validate();
                    check_chern_work(spec, opt.max_work);
                    if (opt.oracle) run_report_oracle(spec, opt.max_work);
                    rows.push_back(build_report(spec));
                }
    write_output(opt.out, render_table(rows, parse_format(opt.format)));
}

void cmd_oracle_check(CliOptions& opt) {
    if (opt.og < 0 || opt.og > 3) throw std::invalid_argument("oracle-check supports g in 0..3");
    if (opt.on < 2 || opt.on > 5) throw std::invalid_argument("oracle-check supports n in 2..5");
    check_oracle_work(opt.og, opt.on, opt.max_work);
    const int g = static_cast<int>(opt.og), n = static_cast<int>(opt.on);
    MacdonaldBasis basis(g, n);
    std::vector<OracleRow> rows;
    bool all = true;
    for (int q = 0; q <= 2 * n; ++q) {
        OracleRow row;
        row.q = q;
        row.macdonald_dim = basis.span_dim(q);
        row.projector_dim = invariant_dim(g, n, q);
        all = all && row.match();
        rows.push_back(row);
    }
    write_output(opt.out, render_oracle(g, n, rows, parse_format(opt.format)));
    if (!all) {
        std::cerr << "internal invariant violation: macdonald span and projector rank disagree\n";
        opt.exit_code = 1;
    }
}

void cmd_selftest(CliOptions& opt) {
    std::vector<CheckResult> results = run_selfchecks(opt.seed, 200, 200);
    std::string body;
    int failures = 0;
    for (const auto& r : results) {
        body += std::string(r.pass ? "ok   " : "FAIL ") + r.name + " (" + r.detail + ")\n";
        if (!r.pass) ++failures;
    }
    if (failures == 0)
        body += "selftest: all checks passed\n";
    else
        body += "selftest: " + std::to_string(failures) + " check(s) failed\n";
    write_output(opt.out, body);
    if (failures > 0) {
        std::cerr << "internal invariant violation: selftest failed\n";
        opt.exit_code = 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology and characteristic-class invariants of symmetric products of surfaces"};
    app.require_subcommand(1);
    CliOptions opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: json, csv or text")->default_str("json");
        cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
    };
    auto add_spec_a = [&](CLI::App* cmd) {
        cmd->add_option("--g", opt.a.g, "genus")->required();
        cmd->add_option("--k", opt.a.k, "number of punctures")->required();
        cmd->add_option("--n", opt.a.n, "symmetric power")->required();
        cmd->add_option("--N", opt.a.N, "euclidean stabilization factor")->default_val(0);
    };

    CLI::App* report = app.add_subcommand("report", "compute the invariant bundle of one space");
    add_spec_a(report);
    add_format(report);
    report->add_flag("--oracle", opt.oracle, "run independent cross-checks before reporting");
    report->add_option("--max-work", opt.max_work, "work cap for the exact pipelines")->default_val(10'000'000);
    report->callback([&] { cmd_report(opt); });

    CLI::App* classify = app.add_subcommand("classify", "compare two spaces");
    add_spec_a(classify);
    classify->add_option("--g2", opt.b.g, "genus of the second space")->required();
    classify->add_option("--k2", opt.b.k, "punctures of the second space")->required();
    classify->add_option("--n2", opt.b.n, "symmetric power of the second space")->required();
    classify->add_option("--N2", opt.b.N, "stabilization of the second space")->default_val(0);
    add_format(classify);
    classify->add_option("--max-work", opt.max_work, "work cap for the exact pipelines")->default_val(10'000'000);
    classify->callback([&] { cmd_classify(opt); });

    CLI::App* table = app.add_subcommand("table", "grid of reports over parameter ranges");
    table->add_option("--g", opt.range_g, "genus range, N or LO..HI")->required();
    table->add_option("--k", opt.range_k, "puncture range, N or LO..HI")->required();
    table->add_option("--n", opt.range_n, "power range, N or LO..HI")->required();
    table->add_option("--N", opt.range_N, "stabilization range, N or LO..HI")->default_str("0");
    add_format(table);
    table->add_flag("--oracle", opt.oracle, "run independent cross-checks on every row");
    table->add_option("--max-work", opt.max_work, "work cap for the exact pipelines")->default_val(10'000'000);
    table->callback([&] { cmd_table(opt); });

    CLI::App* oracle = app.add_subcommand("oracle-check", "compare macdonald spans with projector ranks");
    oracle->add_option("--g", opt.og, "genus (0..3)")->required();
    oracle->add_option("--n", opt.on, "symmetric power (2..5)")->required();
    add_format(oracle);
    oracle->add_option("--max-work", opt.max_work, "cap on n! * (2g+2)^n basis actions")->default_val(10'000'000);
    oracle->callback([&] { cmd_oracle_check(opt); });

    CLI::App* selftest = app.add_subcommand("selftest", "run the deterministic self-check battery");
    selftest->add_option("--seed", opt.seed, "seed for the randomized property suites")->default_val(0);
    selftest->add_option("--out", opt.out, "write output to this file instead of stdout");
    selftest->callback([&] { cmd_selftest(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return opt.exit_code;
}
