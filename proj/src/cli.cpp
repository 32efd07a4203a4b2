#include "padfeas/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "padfeas/certificate.hpp"
#include "padfeas/hardness.hpp"
#include "padfeas/newton.hpp"
#include "padfeas/oracle.hpp"
#include "padfeas/padic.hpp"
#include "padfeas/poly.hpp"
#include "padfeas/primes.hpp"
#include "padfeas/resultant.hpp"
#include "padfeas/solve.hpp"

namespace padfeas {
namespace {

using nlohmann::json;

// Shared flag storage; each subcommand registers only the flags it accepts.
struct Opts {
    std::string prime;
    std::string poly_inline;
    std::string poly_file;
    std::string cert_path;
    std::string cnf_path;
    std::string prime_mode;
    std::string method = "auto";
    std::string window;
    std::string epsilon = "1/3";
    long depth = 8;
    long budget = 1000000;
    long threads = 1;
    unsigned long long seed = 0;
    long n_block = 1;
    bool collapse = false;
    bool check_transfer = false;
    bool wagstaff = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Int parse_prime_flag(const std::string& s) {
    Int p;
    try {
        p = Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("--prime: not a decimal integer: " + s);
    }
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("--prime: " + s + " is not prime");
    return p;
}

Rat parse_epsilon_flag(const std::string& s) {
    Rat e;
    try {
        e = Rat(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("--epsilon: expected a fraction like 1/3");
    }
    if (e.get_den() == 0) throw std::invalid_argument("--epsilon: zero denominator");
    e.canonicalize();
    if (!(e > 0 && e < Rat(1, 2))) throw std::invalid_argument("--epsilon must lie in (0, 1/2)");
    return e;
}

// Inline values and files both accept either syntax; a leading '{' selects
// the JSON form.
SparsePoly load_poly(const Opts& o) {
    const bool have_inline = !o.poly_inline.empty();
    const bool have_file = !o.poly_file.empty();
    if (have_inline == have_file)
        throw std::invalid_argument("exactly one of --poly / --poly-file is required");
    std::string text = have_file ? read_file(o.poly_file) : o.poly_inline;
    std::string origin = have_file ? o.poly_file + ": " : "";
    try {
        std::size_t i = text.find_first_not_of(" \t\r\n");
        if (i != std::string::npos && text[i] == '{') return sparse_poly_from_json(text);
        return parse_poly_text(text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(origin + e.what());
    }
}

json poly_json(const SparsePoly& f) { return json::parse(sparse_poly_to_json(f)); }
json cert_json(const Certificate& c) { return json::parse(certificate_to_json(c)); }

json int_json(const Int& v) {
    return v.fits_slong_p() ? json(v.get_si()) : json(v.get_str());
}

int verdict_code(Feasibility a) {
    switch (a) {
        case Feasibility::Feasible: return 0;
        case Feasibility::Infeasible: return 1;
        case Feasibility::Unknown: return 2;
    }
    return 2;
}

FeasibilityVerdict run_method(const SparsePoly& f, const Int& p, const std::string& m) {
    if (m == "auto") return solve_auto(f, p);
    if (m == "trivial") return feas_trivial(f, p);
    if (m == "binomial") {
        if (f.nvars != 1 || f.term_count() != 2)
            throw std::invalid_argument("--method binomial needs a univariate two-term polynomial");
        return feas_univariate_generic(f, p);  // delegates to the exact power criterion
    }
    if (m == "trinomial") return feas_trinomial(f, p);
    if (m == "univariate") return feas_univariate_generic(f, p);
    if (m == "quadratic") return feas_quadratic_diagonal(f, p);
    if (m == "simplex") return feas_simplex(f, p);
    if (m == "weil") {
        if (auto w = weil_guarantee(f, p)) return *w;
        return {Feasibility::Unknown, std::nullopt,
                "the point-count guarantee does not apply to this instance"};
    }
    throw std::invalid_argument("unknown --method: " + m);
}

// `certify` prints the bare certificate object; `solve` wraps the full
// verdict envelope. Exit code is the verdict either way.
int run_solve(const Opts& o, std::ostream& out, bool bare_certificate) {
    Int p = parse_prime_flag(o.prime);
    SparsePoly f = load_poly(o);
    FeasibilityVerdict v = run_method(f, p, o.method);
    json j;
    if (bare_certificate && v.cert) {
        j = cert_json(*v.cert);
    } else if (bare_certificate) {
        j = json{{"verdict", feasibility_name(v.answer)},
                 {"certificate", nullptr},
                 {"reason", v.reason}};
    } else {
        j = json{{"command", "solve"},
                 {"prime", p.get_str()},
                 {"method", o.method},
                 {"poly", poly_json(f)},
                 {"verdict", feasibility_name(v.answer)},
                 {"reason", v.reason},
                 {"certificate", v.cert ? cert_json(*v.cert) : json(nullptr)}};
    }
    out << j.dump(2) << "\n";
    return verdict_code(v.answer);
}

int run_verify(const Opts& o, std::ostream& out) {
    Int p = parse_prime_flag(o.prime);
    SparsePoly f = load_poly(o);
    if (o.cert_path.empty()) throw std::invalid_argument("--cert is required");
    Certificate cert;
    try {
        cert = certificate_from_json(read_file(o.cert_path));
    } catch (const json::exception& e) {
        throw std::invalid_argument(o.cert_path + ": " + e.what());
    }
    bool ok = verify_certificate(f, p, cert);
    out << json{{"command", "verify"},
                {"prime", p.get_str()},
                {"kind", cert_kind_name(cert.kind)},
                {"valid", ok}}
               .dump(2)
        << "\n";
    return ok ? 0 : 1;
}

int run_polygon(const Opts& o, std::ostream& out) {
    Int p = parse_prime_flag(o.prime);
    SparsePoly f = load_poly(o);
    LowerHull hull = build_lower_hull(f, p);
    json edges = json::array();
    for (const HullEdge& e : hull.edges) {
        edges.push_back(json{{"from", json::array({e.a0, int_json(e.v0)})},
                             {"to", json::array({e.a1, int_json(e.v1)})},
                             {"slope", e.slope.get_str()},
                             {"normal", json::array({int_json(-e.slope.get_num()),
                                                     int_json(e.slope.get_den())})},
                             {"length", e.horiz_length}});
    }
    json runs = json::array();
    for (const SlopeRun& r : root_valuations(f, p))
        runs.push_back(json{{"valuation", r.valuation.get_str()}, {"count", r.count}});
    out << json{{"command", "newton-polygon"},
                {"prime", p.get_str()},
                {"poly", poly_json(f)},
                {"edges", edges},
                {"root_valuations", runs}}
               .dump(2)
        << "\n";
    return 0;
}

int run_discriminant(const Opts& o, std::ostream& out) {
    SparsePoly f = load_poly(o);
    Int d = a_discriminant(f);
    out << json{{"command", "discriminant"},
                {"poly", poly_json(f)},
                {"discriminant", d.get_str()}}
               .dump(2)
        << "\n";
    return 0;
}

long rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::invalid_argument("valuation window out of range");
    return q.get_si();
}

long rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::invalid_argument("valuation window out of range");
    return q.get_si();
}

// Default window: Newton-polygon root valuations for univariate input
// (complete — every root valuation is an edge slope), a fixed symmetric
// guess otherwise.
OracleWindow derive_window(const SparsePoly& f, const Int& p) {
    if (f.nvars == 1 && !f.is_zero()) {
        SparsePoly g = min_exponent(f) < 0 ? translate_min_exponents(f) : f;
        std::vector<SlopeRun> runs = root_valuations(g, p);
        if (runs.empty()) return {0, 0};
        long lo = rat_floor(runs.front().valuation), hi = rat_ceil(runs.front().valuation);
        for (const SlopeRun& r : runs) {
            lo = std::min(lo, rat_floor(r.valuation));
            hi = std::max(hi, rat_ceil(r.valuation));
        }
        return {lo, hi};
    }
    return {-4, 4};
}

OracleWindow parse_window_flag(const std::string& s) {
    std::size_t sep = s.find_first_of(":,");
    if (sep == std::string::npos)
        throw std::invalid_argument("--window: expected lo:hi");
    try {
        std::size_t used = 0;
        long lo = std::stol(s.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument("");
        std::string rest = s.substr(sep + 1);
        long hi = std::stol(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        if (lo > hi) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("--window: expected lo:hi with lo <= hi");
    }
}

int run_oracle(const Opts& o, std::ostream& out) {
    Int p = parse_prime_flag(o.prime);
    SparsePoly f = load_poly(o);
    OracleWindow w = o.window.empty() ? derive_window(f, p) : parse_window_flag(o.window);
    OracleResult r = feas_oracle_qp(f, p, w, o.depth, o.budget);
    const char* name = r.status == OracleStatus::Feasible         ? "Feasible"
                       : r.status == OracleStatus::InfeasibleAtDepth ? "InfeasibleAtDepth"
                                                                     : "Inconclusive";
    out << json{{"command", "oracle"},
                {"prime", p.get_str()},
                {"poly", poly_json(f)},
                {"window", json::array({w.lo, w.hi})},
                {"depth", o.depth},
                {"status", name},
                {"certificate", r.cert ? cert_json(*r.cert) : json(nullptr)}}
               .dump(2)
        << "\n";
    return r.status == OracleStatus::Feasible         ? 0
           : r.status == OracleStatus::InfeasibleAtDepth ? 1
                                                         : 2;
}

json binomial_product_json(const BinomialProduct& b) {
    json factors = json::array();
    for (const BinomialFactor& f : b.factors)
        factors.push_back(json{{"m", f.m.get_str()}, {"e", f.e}});
    return json{{"d", b.d.get_str()}, {"factors", factors}};
}

json forge_json(const ForgeResult& r) {
    json blk = json::array();
    for (const Int& q : r.block) blk.push_back(q.get_str());
    return json{{"mode", "agp"},
                {"is_prime", r.is_prime},
                {"block_index", r.block_index},
                {"block", blk},
                {"block_modulus", r.block_modulus.get_str()},
                {"c", r.c.get_str()},
                {"p", r.p.get_str()},
                {"attempts", r.attempts},
                {"draw_bound", r.draw_bound},
                {"threshold_x", r.threshold_x.get_str()}};
}

int run_reduce_sat(const Opts& o, std::ostream& out) {
    if (o.cnf_path.empty()) throw std::invalid_argument("--cnf is required");
    std::ifstream in(o.cnf_path);
    if (!in) throw std::invalid_argument("cannot read file: " + o.cnf_path);
    CnfInstance cnf;
    try {
        cnf = read_dimacs(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(o.cnf_path + ": " + e.what());
    }
    std::vector<Int> primes = first_primes(static_cast<std::size_t>(cnf.nvars));
    SatReduction red = reduce_3sat(cnf, primes);

    json plist = json::array();
    for (const Int& q : primes) plist.push_back(q.get_str());
    json system = json::array();
    for (const BinomialProduct& b : red.system) system.push_back(binomial_product_json(b));

    // The clause images all divide x^d - 1, so their gcd with it — the
    // intersection of the cyclotomic index sets — carries exactly the common
    // roots of the whole system.
    std::vector<Int> common = cyclotomic_indices(BinomialProduct{red.d, {{red.d, 1}}});
    for (const BinomialProduct& b : red.system) {
        std::vector<Int> s = cyclotomic_indices(b);
        std::erase_if(common, [&](const Int& t) {
            return std::find(s.begin(), s.end(), t) == s.end();
        });
    }
    json cidx = json::array();
    for (const Int& t : common) cidx.push_back(t.get_str());

    json j{{"command", "reduce-sat"},
           {"nvars", cnf.nvars},
           {"clauses", cnf.clauses.size()},
           {"primes", plist},
           {"d", red.d.get_str()},
           {"prime_mode", o.prime_mode},
           {"system", system},
           {"common_indices", cidx}};

    Int p;
    if (o.prime_mode == "given") {
        if (o.prime.empty())
            throw std::invalid_argument("--prime is required with --prime-mode given");
        p = parse_prime_flag(o.prime);
    } else {
        ForgeParams fp;
        fp.n = static_cast<unsigned>(std::max(1, cnf.nvars));
        fp.epsilon = parse_epsilon_flag(o.epsilon);
        fp.rng_seed = static_cast<unsigned long>(o.seed);
        fp.force_block = 1;  // the first block is exactly the reduction's primes
        ForgeResult r = forge_prime(fp);
        j["forge"] = forge_json(r);
        if (!r.is_prime) {
            j["prime"] = nullptr;
            out << j.dump(2) << "\n";
            return 2;
        }
        p = r.p;
    }
    j["prime"] = p.get_str();

    if (o.check_transfer) {
        if (mod_reduce(p - 1, red.d) != 0)
            throw std::invalid_argument("--check-transfer needs p = 1 (mod d); d = " +
                                        red.d.get_str());
        j["common_root_mod_p"] = roots_of_unity_transfer_check(red.system, red.d, p);
    }

    if (o.collapse) {
        if (!red.d.fits_slong_p())
            throw std::runtime_error("reduce-sat: d too large to expand the collapsed form");
        SparsePoly g = expand(from_cyclotomic_indices(red.d, common));
        j["gcd"] = poly_json(g);
        j["collapsed"] = poly_json(collapse_to_single(g, red.d.get_si(), p));
    }
    out << j.dump(2) << "\n";
    return 0;
}

int run_forge(const Opts& o, std::ostream& out) {
    if (o.wagstaff) {
        auto [k, p] = wagstaff_prime(static_cast<unsigned>(o.n_block));
        out << json{{"command", "forge-prime"},
                    {"mode", "wagstaff"},
                    {"n", o.n_block},
                    {"block_modulus", primorial(static_cast<unsigned>(o.n_block)).get_str()},
                    {"k", k.get_str()},
                    {"p", p.get_str()}}
                   .dump(2)
            << "\n";
        return 0;
    }
    ForgeParams fp;
    fp.n = static_cast<unsigned>(o.n_block);
    fp.epsilon = parse_epsilon_flag(o.epsilon);
    fp.rng_seed = static_cast<unsigned long>(o.seed);
    ForgeResult r = forge_prime(fp);
    json j = forge_json(r);
    j["command"] = "forge-prime";
    out << j.dump(2) << "\n";
    return r.is_prime ? 0 : 2;
}

void add_threads(CLI::App* cmd, Opts& o) {
    cmd->add_option("--threads", o.threads, "worker cap (dispatch itself is single-threaded)")
        ->check(CLI::PositiveNumber);
}

void add_poly_flags(CLI::App* cmd, Opts& o) {
    auto* a = cmd->add_option("--poly", o.poly_inline,
                              "polynomial: text like \"1 + 2*x1^2 - 3*x2^2\" or a JSON object");
    auto* b = cmd->add_option("--poly-file", o.poly_file, "file holding the polynomial");
    a->excludes(b);
    b->excludes(a);
}

void add_prime_flag(CLI::App* cmd, Opts& o) {
    cmd->add_option("--prime", o.prime, "prime modulus p (decimal)")->required();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic rational feasibility of sparse polynomials"};
    app.name("padfeas");
    app.require_subcommand(1);
    Opts o;
    int code = 0;

    CLI::App* solve = app.add_subcommand("solve", "decide whether f has a root over Q_p");
    add_prime_flag(solve, o);
    add_poly_flags(solve, o);
    solve->add_option("--method", o.method, "solver override (default: dispatch by shape)")
        ->check(CLI::IsMember({"auto", "trivial", "binomial", "trinomial", "univariate",
                               "quadratic", "simplex", "weil"}));
    add_threads(solve, o);
    solve->callback([&] { code = run_solve(o, out, false); });

    CLI::App* certify = app.add_subcommand("certify", "like solve, printing only the certificate");
    add_prime_flag(certify, o);
    add_poly_flags(certify, o);
    certify->add_option("--method", o.method, "solver override")
        ->check(CLI::IsMember({"auto", "trivial", "binomial", "trinomial", "univariate",
                               "quadratic", "simplex", "weil"}));
    add_threads(certify, o);
    certify->callback([&] { code = run_solve(o, out, true); });

    CLI::App* verify = app.add_subcommand("verify", "replay and check a certificate against f");
    add_prime_flag(verify, o);
    add_poly_flags(verify, o);
    verify->add_option("--cert", o.cert_path, "certificate JSON file")->required();
    add_threads(verify, o);
    verify->callback([&] { code = run_verify(o, out); });

    CLI::App* polygon = app.add_subcommand("newton-polygon", "lower hull and root valuations");
    add_prime_flag(polygon, o);
    add_poly_flags(polygon, o);
    add_threads(polygon, o);
    polygon->callback([&] { code = run_polygon(o, out); });

    CLI::App* disc = app.add_subcommand("discriminant", "discriminant of a univariate polynomial");
    add_poly_flags(disc, o);
    add_threads(disc, o);
    disc->callback([&] { code = run_discriminant(o, out); });

    CLI::App* oracle = app.add_subcommand("oracle", "bounded reference search over Q_p");
    add_prime_flag(oracle, o);
    add_poly_flags(oracle, o);
    oracle->add_option("--depth", o.depth, "lift-tree depth (default 8)")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--budget", o.budget, "lift-tree node budget")->check(CLI::PositiveNumber);
    oracle->add_option("--window", o.window, "valuation window lo:hi (default: Newton polygon)");
    add_threads(oracle, o);
    oracle->callback([&] { code = run_oracle(o, out); });

    CLI::App* reduce = app.add_subcommand("reduce-sat", "3CNF to roots-of-unity polynomial system");
    reduce->add_option("--cnf", o.cnf_path, "DIMACS CNF file")->required();
    reduce->add_option("--prime-mode", o.prime_mode, "prime source: given | forge")
        ->required()
        ->check(CLI::IsMember({"given", "forge"}));
    reduce->add_option("--prime", o.prime, "prime for --prime-mode given (decimal)");
    reduce->add_option("--seed", o.seed, "RNG seed for --prime-mode forge");
    reduce->add_option("--epsilon", o.epsilon, "forge failure bound, a fraction in (0,1/2)");
    reduce->add_flag("--collapse", o.collapse,
                     "also emit the single collapsed polynomial for (gcd, x^d-1, p)");
    reduce->add_flag("--check-transfer", o.check_transfer,
                     "evaluate the system at the d-th roots of unity mod p (needs p = 1 mod d)");
    add_threads(reduce, o);
    reduce->callback([&] { code = run_reduce_sat(o, out); });

    CLI::App* forge = app.add_subcommand("forge-prime", "randomized prime in 1 + Z*primorial-block");
    forge->add_option("--n", o.n_block, "block length (number of consecutive primes)")
        ->required()
        ->check(CLI::Range(1L, 10000L));
    forge->add_option("--epsilon", o.epsilon, "failure bound, a fraction in (0,1/2)");
    forge->add_option("--seed", o.seed, "RNG seed");
    forge->add_flag("--wagstaff", o.wagstaff, "deterministic search for the least 1 + k*primorial(n)");
    add_threads(forge, o);
    forge->callback([&] { code = run_forge(o, out); });

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("padfeas");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return code;
    } catch (const CLI::CallForHelp&) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All) << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::runtime_error& e) {
        err << "limit reached: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (...) {
        err << "internal error\n";
        return 2;
    }
}

}  // namespace padfeas
