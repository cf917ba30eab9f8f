#include "quivinv/cli.hpp"

#include "quivinv/errors.hpp"
#include "quivinv/invariants.hpp"
#include "quivinv/oracle.hpp"
#include "quivinv/selfcheck.hpp"
#include "quivinv/tableaux.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace quivinv {

namespace {

constexpr std::uint64_t kSelftestSeed = 20240601;

std::string dims_str(const DimVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

DimVector parse_int_list(const std::string& s, const std::string& flag) {
    DimVector v;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string token = s.substr(start, comma == std::string::npos ? comma : comma - start);
        if (token.empty() || token.size() > 8 ||
            !std::all_of(token.begin(), token.end(),
                         [](unsigned char ch) { return std::isdigit(ch); }))
            throw domain_error(flag + " expects a comma-separated list of non-negative integers");
        v.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return v;
}

DimVector parse_dim(const std::string& s, int num_vertices) {
    DimVector v = parse_int_list(s, "--dim");
    if (v.size() != static_cast<std::size_t>(num_vertices))
        throw domain_error("--dim needs one entry per vertex (" +
                           std::to_string(num_vertices) + " here)");
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
        throw domain_error("--dim must be nonzero");
    return v;
}

std::vector<int> parse_legs(const std::string& s, int num_vertices) {
    if (s.empty()) return std::vector<int>(static_cast<std::size_t>(num_vertices), 1);
    DimVector v = parse_int_list(s, "--legs");
    if (v.size() != static_cast<std::size_t>(num_vertices))
        throw domain_error("--legs needs one entry per vertex (" +
                           std::to_string(num_vertices) + " here)");
    return v;
}

struct Truncation {
    DimVector box;
    long cap;
};

Truncation parse_max(const std::string& s, int num_vertices) {
    if (s.find(',') != std::string::npos) {
        DimVector box = parse_int_list(s, "--max");
        if (box.size() != static_cast<std::size_t>(num_vertices))
            throw domain_error("--max needs one entry per vertex (" +
                               std::to_string(num_vertices) + " here) or a single bound");
        return {box, -1};
    }
    DimVector one = parse_int_list(s, "--max");
    int n = one.at(0);
    if (n < 1) throw domain_error("--max must be at least 1");
    return {DimVector(static_cast<std::size_t>(num_vertices), n), num_vertices > 1 ? n : -1};
}

Quiver load_quiver(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot read quiver file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return Quiver::parse(text.str());
}

MultiPartition rows_of(const DimVector& v) {
    std::vector<Partition> slots;
    slots.reserve(v.size());
    for (int n : v) slots.push_back(Partition::single_row(n));
    return MultiPartition(std::move(slots));
}

std::string render(const LaurentPolyQ& p, bool machine) {
    return machine ? p.to_machine() : p.to_string();
}

/* All nonzero kept keys in graded order: total degree first, then
   lexicographic. */
std::vector<DimVector> graded_keys(const DimVector& box, long cap) {
    std::vector<DimVector> keys;
    DimVector v(box.size(), 0);
    for (;;) {
        long total = std::accumulate(v.begin(), v.end(), 0L);
        if (total > 0 && (cap < 0 || total <= cap)) keys.push_back(v);
        std::size_t i = 0;
        while (i < v.size() && v[i] == box[i]) { v[i] = 0; ++i; }
        if (i == v.size()) break;
        ++v[i];
    }
    std::sort(keys.begin(), keys.end(), [](const DimVector& a, const DimVector& b) {
        long ta = std::accumulate(a.begin(), a.end(), 0L);
        long tb = std::accumulate(b.begin(), b.end(), 0L);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return keys;
}

struct Options {
    std::string quiver_path;
    std::string dim;
    std::string mu;
    std::string legs;
    std::string max;
    std::string level = "fast";
    bool sym = false;
    bool machine = false;
    int threads = 0;
};

void run_kac(const Options& o, std::ostream& out) {
    Quiver g = load_quiver(o.quiver_path);
    if (o.dim.empty() == o.mu.empty())
        throw domain_error("kac needs exactly one of --dim and --mu");
    MultiPartition mu = o.mu.empty() ? rows_of(parse_dim(o.dim, g.num_vertices()))
                                     : MultiPartition::parse(o.mu);
    out << "A=" << render(kac_poly(g, mu, o.threads), o.machine) << "\n";
}

void run_hsm(const Options& o, std::ostream& out) {
    Quiver g = load_quiver(o.quiver_path);
    std::vector<int> legs = parse_legs(o.legs, g.num_vertices());
    MultiPartition mu = MultiPartition::parse(o.mu);
    out << "H=" << render(hs_mu(g, legs, mu, o.threads), o.machine) << "\n";
}

void run_dt(const Options& o, std::ostream& out) {
    Quiver g = load_quiver(o.quiver_path);
    int r = g.num_vertices();
    if (o.dim.empty() == o.max.empty())
        throw domain_error("dt needs exactly one of --dim and --max");
    if (o.sym) {
        if (!g.is_symmetric())
            throw domain_error("--sym needs a symmetric quiver "
                               "(equal arrow counts in both directions)");
        SymmetricQuiverProblem p(g, default_kprime(g));
        if (!o.dim.empty()) {
            DimVector v = parse_dim(o.dim, r);
            out << "DT=" << render(dt_via_qseries(p, v).at(v), o.machine) << "\n";
            return;
        }
        Truncation t = parse_max(o.max, r);
        auto table = dt_via_qseries(p, t.box, t.cap);
        for (const DimVector& v : graded_keys(t.box, t.cap))
            out << "v=" << dims_str(v) << " DT=" << render(table.at(v), o.machine) << "\n";
        return;
    }
    std::vector<int> legs = parse_legs(o.legs, r);
    if (!o.dim.empty()) {
        DimVector v = parse_dim(o.dim, r);
        out << "DT=" << render(dt_via_symfunc(g, legs, v, {}, o.threads), o.machine) << "\n";
        return;
    }
    Truncation t = parse_max(o.max, r);
    MasterSeries ms(g, legs, t.box, t.cap, o.threads);
    for (const DimVector& v : graded_keys(t.box, t.cap))
        out << "v=" << dims_str(v) << " DT=" << render(ms.dt(v), o.machine) << "\n";
}

void run_series(const Options& o, std::ostream& out) {
    Quiver g = load_quiver(o.quiver_path);
    std::vector<int> legs = parse_legs(o.legs, g.num_vertices());
    Truncation t = parse_max(o.max, g.num_vertices());
    MasterSeries ms(g, legs, t.box, t.cap, o.threads);
    for (const DimVector& v : graded_keys(t.box, t.cap))
        out << "v=" << dims_str(v) << " H=" << ms.series().coeff(v).to_string() << "\n";
}

void run_roots(const Options& o, std::ostream& out) {
    Quiver g = load_quiver(o.quiver_path);
    RootClass c = classify_root(g, parse_dim(o.dim, g.num_vertices()));
    out << (c == RootClass::RealRoot        ? "real"
            : c == RootClass::ImaginaryRoot ? "imaginary"
                                            : "notroot")
        << "\n";
}

void run_oracle(const Options& o, std::ostream& out) {
    Quiver g = load_quiver(o.quiver_path);
    DimVector v = parse_dim(o.dim, g.num_vertices());
    LaurentPolyQ poly = kac_poly(g, rows_of(v), o.threads);
    bool all_match = true;
    for (int q : {2, 3}) {
        Int count = kac_count(q, g, v);
        Int poly_eval = poly.eval_int(Int(q));
        bool match = count == poly_eval;
        all_match = all_match && match;
        out << "q=" << q << " v=" << dims_str(v) << " count=" << count.get_str()
            << " poly_eval=" << poly_eval.get_str() << " match=" << (match ? "yes" : "no")
            << "\n";
    }
    if (!all_match)
        throw certification_error("finite-field count disagrees with the Kac polynomial");
}

int run_selftest(const Options& o, std::ostream& out) {
    out << "selftest level=" << o.level << " seed=" << kSelftestSeed << "\n";
    std::vector<std::function<SuiteResult()>> suites = {
        [] { return check_symfunc_basics(); },
        [] { return check_specialization_identities(6, 7); },
        [] { return check_log_commutation(kSelftestSeed, 12); },
        [] { return check_pentagon(4); },
    };
    if (o.level == "full") {
        suites.push_back([] { return check_loop_table(2, 6); });
        suites.push_back([] { return check_loop_table(3, 5); });
        suites.push_back([&o] { return check_oracle_corpus(o.threads); });
    }
    long total_checks = 0;
    bool all_ok = true;
    for (const auto& suite : suites) {
        SuiteResult r;
        try {
            r = suite();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        total_checks += r.checks;
        out << "suite=" << r.name << " checks=" << r.checks
            << " status=" << (r.ok ? "ok" : "FAIL");
        if (!r.ok) out << " detail=\"" << r.detail << "\"";
        out << "\n";
        all_ok = all_ok && r.ok;
    }
    if (all_ok) {
        out << "selftest: ok (" << total_checks << " checks)\n";
        return 0;
    }
    out << "selftest: FAILED\n";
    return 2;
}

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Kac polynomials, Hall pairings and refined DT invariants of quivers",
                 "quivinv"};
    app.require_subcommand(1);
    Options o;

    auto add_quiver = [&o](CLI::App* sub) {
        sub->add_option("--quiver", o.quiver_path, "path to a quiver file")->required();
    };
    auto add_threads = [&o](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "worker threads, 0 means all cores");
    };

    CLI::App* kac = app.add_subcommand(
        "kac", "Kac polynomial A_mu(q); --dim v is shorthand for one-row mu");
    add_quiver(kac);
    kac->add_option("--dim", o.dim, "dimension vector, comma separated");
    kac->add_option("--mu", o.mu, "multipartition, e.g. '[2,1];[1]'");
    kac->add_flag("--machine", o.machine, "machine-readable polynomial output");
    add_threads(kac);

    CLI::App* hsm = app.add_subcommand("hsm", "Hall pairing polynomial H^s_mu(q)");
    add_quiver(hsm);
    hsm->add_option("--mu", o.mu, "multipartition, one slot per (vertex, leg)")->required();
    hsm->add_option("--legs", o.legs, "slots per vertex, comma separated (default all 1)");
    hsm->add_flag("--machine", o.machine, "machine-readable polynomial output");
    add_threads(hsm);

    CLI::App* dt = app.add_subcommand("dt", "refined DT invariants DT_v(q)");
    add_quiver(dt);
    dt->add_option("--dim", o.dim, "single dimension vector");
    dt->add_option("--max", o.max, "truncation: per-vertex list, or one total bound");
    CLI::Option* dt_sym = dt->add_flag(
        "--sym", o.sym, "input is a symmetric quiver; use its matched quiver with legs");
    CLI::Option* dt_legs =
        dt->add_option("--legs", o.legs, "slots per vertex, comma separated (default all 1)");
    dt_sym->excludes(dt_legs);
    dt_legs->excludes(dt_sym);
    dt->add_flag("--machine", o.machine, "machine-readable polynomial output");
    add_threads(dt);

    CLI::App* series = app.add_subcommand(
        "series", "master series coefficients in the power-sum basis");
    add_quiver(series);
    series->add_option("--legs", o.legs, "slots per vertex, comma separated (default all 1)");
    series->add_option("--max", o.max, "truncation: per-vertex list, or one total bound")
        ->required();
    add_threads(series);

    CLI::App* roots = app.add_subcommand(
        "roots", "classify a dimension vector: real, imaginary or notroot");
    add_quiver(roots);
    roots->add_option("--dim", o.dim, "dimension vector, comma separated")->required();

    CLI::App* oracle = app.add_subcommand(
        "oracle", "compare Kac polynomial values with finite-field counts at q = 2, 3");
    add_quiver(oracle);
    oracle->add_option("--dim", o.dim, "dimension vector, comma separated")->required();
    add_threads(oracle);

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in property suites");
    selftest->add_option("level", o.level, "fast (default) or full")
        ->check(CLI::IsMember({"fast", "full"}));
    add_threads(selftest);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        int code = 0;
        if (app.got_subcommand(kac)) run_kac(o, out);
        else if (app.got_subcommand(hsm)) run_hsm(o, out);
        else if (app.got_subcommand(dt)) run_dt(o, out);
        else if (app.got_subcommand(series)) run_series(o, out);
        else if (app.got_subcommand(roots)) run_roots(o, out);
        else if (app.got_subcommand(oracle)) run_oracle(o, out);
        else code = run_selftest(o, out);
        kf_cache_flush();
        return code;
    } catch (const certification_error& e) {
        err << "certification failure: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace quivinv
