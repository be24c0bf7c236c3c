// lsdc: build / verify / costs / bounds / sweep over scheme JSON files.
//
// Exit codes: 0 success, 1 verification failure, 2 resource or
// configuration errors (bad flags, I/O, infeasible builds, limits).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lsdc/bounds.hpp"
#include "lsdc/json_io.hpp"
#include "lsdc/multishot.hpp"
#include "lsdc/scheme.hpp"
#include "lsdc/sim.hpp"

namespace {

using namespace lsdc;

// unreduced a/b, matching the cost definitions (e.g. 6/8, not 3/4)
std::string frac(unsigned long long num, unsigned long long den) {
    std::ostringstream os;
    os << num << "/" << den << " ("
       << fmt_g12(static_cast<double>(num) / static_cast<double>(den)) << ")";
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

void print_costs(const Scheme& s, const CostReport& c, std::ostream& os) {
    os << "q=" << s.field.q() << " K=" << s.K << " N=" << s.N << " L=" << s.L
       << " T=" << s.T << "\n";
    os << "gamma  = " << frac(c.max_column_support, s.N) << "\n";
    os << "delta  = " << frac(c.d_weight, s.K * s.N) << "\n";
    os << "Delta  = " << frac(c.d_weight, s.K) << "\n";
    os << "per-user symbols =";
    for (auto u : c.user_symbols) os << " " << u;
    os << "\nper-column servers =";
    for (auto w : c.column_supports) os << " " << w;
    os << "\n";
}

struct BuildArgs {
    std::uint32_t q = 2;
    std::size_t K = 0, N = 0, L = 0, T = 1;
    std::string f_path, d_path, out_path, trace_path;
    std::string strategy = "full-covering";
    int radius = -1;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t max_table = kDefaultMaxTable;
    std::uint64_t max_space = kDefaultMaxSpace;
    bool no_repair = false;
    bool paper_example = false;
};

int cmd_build(const BuildArgs& a) {
    if (a.paper_example) {
        Scheme s = example_scheme();
        print_costs(s, costs(s), std::cout);
        std::cout << "verified: OK\n";
        if (!a.out_path.empty()) save_scheme(s, a.out_path);
        return 0;
    }

    FqMatrix F = !a.f_path.empty()
                     ? load_matrix(a.f_path)
                     : random_matrix(Field(a.q), a.K, a.L, a.seed);
    if (F.rows() == 0 || F.cols() == 0)
        throw DomainError("need --F, or --K and --L, to define demands");

    BuildOptions opts;
    opts.radius = a.radius;
    opts.seed = a.seed;
    opts.max_table = a.max_table;
    opts.max_space = a.max_space;
    opts.repair = !a.no_repair;

    Scheme s = [&] {
        if (a.strategy == "uncoded-decentralized") {
            if (a.T != 1)
                throw DomainError("uncoded strategies are single-shot");
            return build_uncoded_decentralized(F);
        }
        if (a.N <= F.rows())
            throw InfeasibleD("need strictly more servers than users (N > K)");
        if (a.strategy == "uncoded-centralized") {
            if (a.T != 1)
                throw DomainError("uncoded strategies are single-shot");
            return build_uncoded_centralized(F, a.N);
        }
        Strategy st = [&]() -> Strategy {
            if (a.strategy == "full-covering") return FullCovering{};
            if (a.strategy == "partial-covering") return PartialCovering{};
            if (a.strategy == "given-d") {
                if (a.d_path.empty())
                    throw DomainError("--strategy given-d needs --D <file>");
                return GivenD{load_matrix(a.d_path)};
            }
            throw DomainError("unknown strategy: " + a.strategy);
        }();
        GreedyTrace trace;
        Scheme built = build_multishot(F, a.N, a.T, st, opts, &trace);
        if (!a.trace_path.empty()) write_text(a.trace_path, trace.to_csv());
        return built;
    }();

    print_costs(s, costs(s), std::cout);
    std::cout << "strategy: " << s.provenance.strategy
              << "  seed: " << s.provenance.seed;
    if (s.provenance.radius >= 0)
        std::cout << "  radius: " << s.provenance.radius;
    if (s.provenance.repaired)
        std::cout << "  repaired (raw gamma " << s.provenance.raw_gamma << ")";
    std::cout << "\nverified: OK\n";
    if (!a.out_path.empty()) save_scheme(s, a.out_path);
    return 0;
}

int cmd_verify(const std::string& path) {
    Scheme s = load_scheme(path);
    VerifyResult v = verify_scheme(s);
    if (v.ok) {
        std::cout << "OK\n";
        return 0;
    }
    std::cout << "mismatch at (" << v.row << "," << v.col << "): expected "
              << v.expected << ", got " << v.got << "\n";
    return 1;
}

int cmd_costs(const std::string& path, bool as_json) {
    Scheme s = load_scheme(path);
    CostReport c = costs(s);
    if (as_json) {
        nlohmann::json j;
        j["gamma"] = {{"num", c.gamma.numerator()}, {"den", c.gamma.denominator()}};
        j["delta"] = {{"num", c.delta.numerator()}, {"den", c.delta.denominator()}};
        j["Delta"] = {{"num", c.Delta.numerator()}, {"den", c.Delta.denominator()}};
        j["max_column_support"] = c.max_column_support;
        j["d_weight"] = c.d_weight;
        j["user_symbols"] = c.user_symbols;
        j["column_supports"] = c.column_supports;
        std::cout << j.dump(2) << "\n";
    } else {
        print_costs(s, c, std::cout);
    }
    return 0;
}

struct BoundsArgs {
    std::string scheme_path, out_path;
    std::uint32_t q = 2;
    std::size_t K = 0, N = 0, T = 1;
    std::uint64_t L = 0;
};

int cmd_bounds(const BoundsArgs& a) {
    std::uint32_t q = a.q;
    std::size_t K = a.K, N = a.N, T = a.T;
    std::uint64_t L = a.L;
    if (!a.scheme_path.empty()) {
        Scheme s = load_scheme(a.scheme_path);
        q = s.field.q();
        K = s.K;
        N = s.N;
        T = s.T;
        SchemeBoundsReport r = bounds_check(s);
        L = r.distinct;
        std::cout << "achieved gamma     = " << fmt_g12(r.achieved_gamma) << "\n"
                  << "converse gamma     = " << fmt_g12(r.converse) << "\n"
                  << "achievable gamma   = " << fmt_g12(r.achievable) << "\n"
                  << "distinct demands   = " << r.distinct << "\n"
                  << "ball consistency   = " << (r.finite_n_ok ? "ok" : "VIOLATED")
                  << "\n"
                  << "within q^K demands = " << (r.within_capacity ? "yes" : "no")
                  << "\n";
    } else {
        if (K == 0 || N == 0 || L == 0)
            throw DomainError("need --scheme or all of --q --K --N --L");
        MultiShotBound b = multishot_gamma_bound(K, N, T, q);
        std::cout << "converse gamma     = " << fmt_g12(converse_gamma(L, N * T, q))
                  << "\n"
                  << "achievable gamma   = " << fmt_g12(b.value) << " (T=" << T
                  << ", per-slot " << fmt_g12(b.rho)
                  << (b.clamped ? ", at the entropy knee" : "") << ")\n";
        if (K < N) {
            DeltaBound d = asymptotic_delta(
                N, static_cast<double>(N - K) / static_cast<double>(N), q);
            std::cout << "asymptotic Delta   = " << fmt_g12(d.Delta)
                      << "  (delta " << fmt_g12(d.delta) << ")\n";
        }
    }
    if (K <= N) {
        std::string csv = region_report(q, K, N, L).to_csv();
        if (!a.out_path.empty())
            write_text(a.out_path, csv);
        else
            std::cout << csv;
    }
    return 0;
}

struct SweepArgs {
    std::uint32_t q = 2;
    std::size_t n_min = 8, n_max = 24, n_step = 1, T = 1;
    std::uint64_t L = 0;
    std::string rate = "1/2";
    std::string strategy = "uncoded-centralized";
    std::string out_path;
    std::uint64_t seed = kDefaultSeed;
};

int cmd_sweep(const SweepArgs& a) {
    long long num = 0, den = 0;
    char slash = 0;
    std::istringstream rs(a.rate);
    if (!(rs >> num >> slash >> den) || slash != '/' || num <= 0 || den <= 0 ||
        num > den)
        throw DomainError("--rate must be a fraction a/b with 0 < a/b <= 1");
    std::ostringstream os;
    os << "q,K,N,L,T,seed,gamma,delta,Delta,gamma_converse,gamma_achievable,"
          "delta_asymptotic\n";
    for (std::size_t N = a.n_min; N <= a.n_max; N += a.n_step) {
        std::size_t K = static_cast<std::size_t>(
            std::llround(static_cast<double>(N) * num / den));
        if (K == 0 || K >= N) continue;
        FqMatrix F = random_matrix(Field(a.q), K, a.L, a.seed);
        Scheme s = [&] {
            if (a.strategy == "uncoded-centralized")
                return build_uncoded_centralized(F, N);
            if (a.strategy == "uncoded-decentralized")
                return build_uncoded_decentralized(F);
            BuildOptions opts;
            opts.seed = a.seed;
            if (a.strategy == "full-covering")
                return build_multishot(F, N, a.T, FullCovering{}, opts);
            if (a.strategy == "partial-covering")
                return build_multishot(F, N, a.T, PartialCovering{}, opts);
            throw DomainError("unknown strategy: " + a.strategy);
        }();
        CostReport c = costs(s);
        MultiShotBound b = multishot_gamma_bound(K, s.N, s.T, a.q);
        DeltaBound d = asymptotic_delta(
            s.N, static_cast<double>(s.N - K) / static_cast<double>(s.N), a.q);
        os << a.q << "," << K << "," << s.N << "," << s.L << "," << s.T << ","
           << a.seed << ","
           << fmt_g12(boost::rational_cast<double>(c.gamma)) << ","
           << fmt_g12(boost::rational_cast<double>(c.delta)) << ","
           << fmt_g12(boost::rational_cast<double>(c.Delta)) << ","
           << fmt_g12(converse_gamma(distinct_columns(F).size(), s.N * s.T, a.q))
           << "," << fmt_g12(b.value) << "," << fmt_g12(d.delta) << "\n";
    }
    if (!a.out_path.empty())
        write_text(a.out_path, os.str());
    else
        std::cout << os.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coded schemes for linearly-separable distributed computing: "
                 "factor a demand matrix F over GF(q) into D*E = F with "
                 "minimum-weight encodings and exact cost accounting."};
    app.require_subcommand(1);

    BuildArgs b;
    CLI::App* build = app.add_subcommand(
        "build", "Build a scheme and report its costs");
    build->add_option("--q", b.q, "Field size (prime)");
    build->add_option("--K", b.K, "Number of users");
    build->add_option("--N", b.N, "Number of servers (must exceed K)");
    build->add_option("--L", b.L, "Number of demanded combinations");
    build->add_option("--T", b.T, "Shots per server (default 1)");
    build->add_option("--F", b.f_path,
                      "Demand matrix file {\"q\",\"matrix\"}; otherwise a "
                      "seeded random F from --q/--K/--L");
    build->add_option("--D", b.d_path, "Decoding matrix file (given-d)");
    build->add_option(
        "--strategy", b.strategy,
        "full-covering | partial-covering | given-d | uncoded-decentralized | "
        "uncoded-centralized (default full-covering)");
    build->add_option("--radius", b.radius,
                      "Covering radius budget; -1 auto-escalates");
    build->add_option("--seed", b.seed, "RNG seed (default 1729)");
    build->add_option("--max-table", b.max_table,
                      "Coset table size cap (default 2^24)");
    build->add_option("--max-space", b.max_space,
                      "Ambient space cap for greedy covering (default 2^24)");
    build->add_flag("--no-repair", b.no_repair, "Skip the idle-server repair");
    build->add_option("--out", b.out_path, "Write the scheme JSON here");
    build->add_option("--trace", b.trace_path,
                      "Write the greedy trace CSV (iteration,uncovered,chosen)");
    build->add_flag("--paper-example", b.paper_example,
                    "Emit the bundled GF(7) reference instance");

    std::string verify_path;
    CLI::App* verify = app.add_subcommand("verify", "Check D*E = F");
    verify->add_option("scheme", verify_path, "Scheme JSON file")->required();

    std::string costs_path;
    bool costs_json = false;
    CLI::App* costsc = app.add_subcommand("costs", "Report exact costs");
    costsc->add_option("scheme", costs_path, "Scheme JSON file")->required();
    costsc->add_flag("--json", costs_json, "Machine-readable output");

    BoundsArgs bo;
    CLI::App* bounds = app.add_subcommand(
        "bounds",
        "Entropy bounds and the (gamma, delta) region CSV "
        "(label,gamma,delta)");
    bounds->add_option("--scheme", bo.scheme_path,
                       "Report bounds around an existing scheme");
    bounds->add_option("--q", bo.q, "Field size (prime)");
    bounds->add_option("--K", bo.K, "Number of users");
    bounds->add_option("--N", bo.N, "Number of servers");
    bounds->add_option("--L", bo.L, "Number of distinct demands");
    bounds->add_option("--T", bo.T, "Shots per server");
    bounds->add_option("--out", bo.out_path, "Write the region CSV here");

    SweepArgs sw;
    CLI::App* sweep = app.add_subcommand(
        "sweep",
        "CSV over N: q,K,N,L,T,seed,gamma,delta,Delta,gamma_converse,"
        "gamma_achievable,delta_asymptotic");
    sweep->add_option("--q", sw.q, "Field size (prime)");
    sweep->add_option("--rate", sw.rate, "K/N as a fraction a/b (K rounded)");
    sweep->add_option("--n-min", sw.n_min, "First N");
    sweep->add_option("--n-max", sw.n_max, "Last N");
    sweep->add_option("--n-step", sw.n_step, "N increment");
    sweep->add_option("--L", sw.L, "Number of demanded combinations")->required();
    sweep->add_option("--T", sw.T, "Shots per server");
    sweep->add_option("--strategy", sw.strategy,
                      "Scheme built per grid point (default uncoded-centralized)");
    sweep->add_option("--seed", sw.seed, "RNG seed for the demand matrices");
    sweep->add_option("--out", sw.out_path, "Write the CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmd_build(b);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (costsc->parsed()) return cmd_costs(costs_path, costs_json);
        if (bounds->parsed()) return cmd_bounds(bo);
        if (sweep->parsed()) return cmd_sweep(sw);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
