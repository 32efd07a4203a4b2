#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "padfeas/certificate.hpp"
#include "padfeas/poly.hpp"

using namespace padfeas;

namespace {

SparsePoly upoly(const std::vector<std::pair<long, Int>>& terms) {
    std::vector<Term> ts;
    for (const auto& [a, c] : terms) ts.push_back(Term{c, {a}});
    return SparsePoly::from_terms(1, ts, false);
}

Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// 1 + 2 x1^2 - 3 x2^2: the running bivariate example.
SparsePoly bivariate_example() {
    return parse_poly_text("1 + 2*x1^2 - 3*x2^2");
}

Certificate hensel_cert(const Int& p, long ell, std::vector<Int> root, long i, long k,
                        std::vector<std::string> transcript = {}) {
    Certificate c;
    c.kind = CertKind::hensel_root;
    c.prime = p;
    c.ell = ell;
    c.root = std::move(root);
    c.deriv_index = i;
    c.deriv_valuation = k;
    c.transcript = std::move(transcript);
    return c;
}

Certificate witness_cert(const Int& p, long ell, const Int& w,
                         std::vector<std::string> transcript = {}) {
    Certificate c;
    c.kind = CertKind::binomial_witness;
    c.prime = p;
    c.ell = ell;
    c.root = {w};
    c.transcript = std::move(transcript);
    return c;
}

Certificate obstruction_cert(const Int& p, std::vector<std::string> transcript = {}) {
    Certificate c;
    c.kind = CertKind::valuation_obstruction;
    c.prime = p;
    c.ell = 1;
    c.transcript = std::move(transcript);
    return c;
}

Certificate quadratic_cert(const Int& p, bool feasible) {
    Certificate c;
    c.kind = CertKind::quadratic_symbolic;
    c.prime = p;
    c.ell = 1;
    c.transcript = {feasible ? "quadratic feasible" : "quadratic infeasible"};
    return c;
}

}  // namespace

TEST_CASE("hensel lift doubles precision to the requested modulus") {
    SparsePoly f = upoly({{0, -2}, {2, 1}});  // x^2 - 2
    auto root = hensel_lift(f, {Int(3)}, 0, 0, 7, 3);
    REQUIRE(root.size() == 1);
    CHECK(root[0] == 108);  // 108^2 = 11664 = 2 + 34 * 343
    CHECK(mod_reduce(root[0], 7) == 3);

    auto longer = hensel_lift(f, {Int(3)}, 0, 0, 7, 9);
    Int m = ipow(7, 9);
    Int residue = mod_reduce(longer[0] * longer[0] - 2, m);
    CHECK(residue == 0);
    CHECK(mod_reduce(longer[0], 343) == 108);
}

TEST_CASE("hensel lift works coordinatewise on bivariate roots") {
    SparsePoly f = bivariate_example();
    // (3, 2) kills f mod 7 and the x1-partial 4*x1 = 12 is a unit there.
    auto root = hensel_lift(f, {Int(3), Int(2)}, 0, 0, 7, 4);
    PadicContext ctx(7, 4);
    CHECK(evaluate_mod(f, root, ctx) == 0);
    CHECK(mod_reduce(root[0], 7) == 3);
    CHECK(root[1] == 2);  // only the lifted coordinate moves

    // Exact roots are fixed points of the iteration.
    auto fixed = hensel_lift(f, {Int(1), Int(1)}, 0, 0, 7, 5);
    CHECK(fixed[0] == 1);
    CHECK(fixed[1] == 1);
}

TEST_CASE("hensel lift handles positive derivative valuation") {
    // f(22) = 343 and f'(22) = 42 has 7-adic valuation exactly 1.
    SparsePoly f = upoly({{0, -97}, {1, -2}, {2, 1}});
    auto root = hensel_lift(f, {Int(22)}, 0, 1, 7, 6);
    PadicContext ctx(7, 6);
    CHECK(evaluate_mod(f, root, ctx) == 0);
    CHECK(mod_reduce(root[0], 49) == 22);
}

TEST_CASE("hensel lift rejects violated preconditions") {
    SparsePoly f = upoly({{0, -2}, {2, 1}});
    CHECK_THROWS_AS(hensel_lift(f, {Int(1)}, 0, 0, 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(hensel_lift(f, {Int(3)}, 0, 1, 7, 3), std::invalid_argument);  // wrong k
    CHECK_THROWS_AS(hensel_lift(f, {Int(3)}, 0, 1, 7, 2), std::invalid_argument);  // ell < 2k+1
    CHECK_THROWS_AS(hensel_lift(f, {Int(3)}, 1, 0, 7, 3), std::invalid_argument);  // bad index
    CHECK_THROWS_AS(hensel_lift(f, {Int(3), Int(0)}, 0, 0, 7, 3), std::invalid_argument);
}

TEST_CASE("verify accepts lifted roots and rejects broken invariants") {
    SparsePoly f = upoly({{0, -2}, {2, 1}});
    CHECK(verify_certificate(f, 7, hensel_cert(7, 3, {Int(108)}, 0, 0)));
    // The invariant precision is 2k+1, so a mod-7 root of the other branch
    // still verifies even at ell = 3.
    CHECK(verify_certificate(f, 7, hensel_cert(7, 3, {Int(4)}, 0, 0)));

    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 3, {Int(1)}, 0, 0)));    // not a root
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 3, {Int(108)}, 0, 1)));  // wrong k
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 3, {Int(400)}, 0, 0)));  // out of range
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 3, {Int(-3)}, 0, 0)));
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 3, {Int(108)}, 5, 0)));  // bad index
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 3, {Int(108), Int(1)}, 0, 0)));
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 0, {Int(108)}, 0, 0)));  // ell < 1
    CHECK_FALSE(verify_certificate(f, 5, hensel_cert(7, 3, {Int(108)}, 0, 0)));  // prime mismatch
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 1, {Int(3)}, 0, -1)));   // negative k

    Certificate c = hensel_cert(7, 3, {Int(108)}, 0, 0);
    c.transcript = {"no-such-op"};
    CHECK_FALSE(verify_certificate(f, 7, c));
}

TEST_CASE("verify requires 2k+1 <= ell") {
    // f(22) = 343 vanishes mod 7^3 and f' has valuation 1, but ell = 2 is
    // below the closure threshold 2*1+1.
    SparsePoly f = upoly({{0, -97}, {1, -2}, {2, 1}});
    CHECK(verify_certificate(f, 7, hensel_cert(7, 3, {Int(22)}, 0, 1)));
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 2, {Int(22)}, 0, 1)));
}

TEST_CASE("binomial witness certificates") {
    SparsePoly f = upoly({{0, -2}, {2, 1}});  // x^2 = 2
    CHECK(verify_certificate(f, 7, witness_cert(7, 1, 3)));
    CHECK(verify_certificate(f, 7, witness_cert(7, 1, 4)));  // the other square root
    CHECK_FALSE(verify_certificate(f, 7, witness_cert(7, 1, 5)));
    CHECK(verify_certificate(f, 7, witness_cert(7, 2, 10)));  // 100 = 2 + 2*49
    CHECK_FALSE(verify_certificate(f, 7, witness_cert(7, 2, 3)));  // stale lower-precision w
    CHECK_FALSE(verify_certificate(f, 7, witness_cert(7, 1, 0)));  // non-unit witness
    CHECK_FALSE(verify_certificate(f, 7, witness_cert(7, 1, 14)));

    // Odd valuation of c: no witness can make x^2 = 7 solvable.
    SparsePoly g = upoly({{0, -7}, {2, 1}});
    for (long w = 1; w < 7; ++w) CHECK_FALSE(verify_certificate(g, 7, witness_cert(7, 1, w)));

    // Non-binomial target polynomial.
    SparsePoly h = upoly({{0, 1}, {1, 1}, {2, 1}});
    CHECK_FALSE(verify_certificate(h, 7, witness_cert(7, 1, 3)));

    // p = 2 with even d needs precision 2*ord_2(d)+1 = 3; 17 is a square in Z_2.
    SparsePoly q = upoly({{0, -17}, {2, 1}});
    CHECK_FALSE(verify_certificate(q, 2, witness_cert(2, 1, 1)));  // ell too small
    CHECK(verify_certificate(q, 2, witness_cert(2, 3, 1)));  // 1^2 = 17 = 1 mod 8
}

TEST_CASE("binomial witness respects the stated precision") {
    // x^2 = 17 over Q_2: witnesses must square to 17 mod 2^ell, ell >= 3.
    SparsePoly q = upoly({{0, -17}, {2, 1}});
    bool found = false;
    for (long w = 1; w < 32; w += 2) {
        Certificate c = witness_cert(2, 5, w);
        if (verify_certificate(q, 2, c)) {
            found = true;
            CHECK(mod_reduce(Int(w) * w, 32) == 17);
        }
    }
    CHECK(found);  // 17 = 9^2 - 64 + ... : 9^2 = 81 = 17 + 2*32
}

TEST_CASE("valuation obstruction certificates") {
    CHECK(verify_certificate(upoly({{0, -7}, {3, 1}}), 7, obstruction_cert(7)));   // 3 ∤ 1
    CHECK(verify_certificate(upoly({{0, -7}, {2, 1}}), 7, obstruction_cert(7)));   // 2 ∤ 1
    CHECK_FALSE(verify_certificate(upoly({{0, -4}, {2, 1}}), 7, obstruction_cert(7)));
    CHECK(verify_certificate(upoly({{0, 5}}), 7, obstruction_cert(7)));  // nonzero constant
    // x = 0 solves 7x + x^4 even though the torus equation is obstructed.
    CHECK_FALSE(verify_certificate(upoly({{1, 7}, {4, 1}}), 7, obstruction_cert(7)));
    // Laurent binomials have no x = 0 escape hatch.
    CHECK(verify_certificate(upoly({{-2, 1}, {1, 7}}), 7, obstruction_cert(7)));
    // Only valuation-preserving ops may justify an obstruction.
    CHECK_FALSE(verify_certificate(upoly({{1, 7}, {4, 1}}), 7, obstruction_cert(7, {"translate"})));
    CHECK(verify_certificate(upoly({{0, -343}, {2, 1}}), 7, obstruction_cert(7, {"rescale 1"})));
}

TEST_CASE("quadratic symbolic certificates recompute the closed form") {
    SparsePoly f = bivariate_example();
    CHECK(verify_certificate(f, 7, quadratic_cert(7, true)));
    CHECK_FALSE(verify_certificate(f, 7, quadratic_cert(7, false)));

    SparsePoly g = parse_poly_text("1 + x1^2 + x2^2");
    CHECK(verify_certificate(g, 2, quadratic_cert(2, false)));
    CHECK_FALSE(verify_certificate(g, 2, quadratic_cert(2, true)));
    CHECK(verify_certificate(g, 5, quadratic_cert(5, true)));  // -1 = 1 + 1 + ... mod 5: 2^2 = -1

    SparsePoly h3 = parse_poly_text("1 + x1^2 + x2^2 + x3^2");
    CHECK(verify_certificate(h3, 2, quadratic_cert(2, false)));
    SparsePoly h4 = parse_poly_text("1 + x1^2 + x2^2 + x3^2 + x4^2");
    CHECK(verify_certificate(h4, 2, quadratic_cert(2, true)));

    // One-square case reduces to a squareness test of -c0/c1.
    SparsePoly sq = upoly({{0, -2}, {2, 1}});
    CHECK(verify_certificate(sq, 7, quadratic_cert(7, true)));
    CHECK(verify_certificate(sq, 5, quadratic_cert(5, false)));

    // Malformed: no claim line, conflicting claims, non-diagonal shape.
    Certificate none = quadratic_cert(7, true);
    none.transcript.clear();
    CHECK_FALSE(verify_certificate(f, 7, none));
    Certificate both = quadratic_cert(7, true);
    both.transcript.push_back("quadratic infeasible");
    CHECK_FALSE(verify_certificate(f, 7, both));
    CHECK_FALSE(verify_certificate(parse_poly_text("1 + x1*x2"), 7, quadratic_cert(7, true)));
}

TEST_CASE("quadratic condition matches direct facts") {
    CHECK(quadratic_symbolic_condition(parse_poly_text("x1^2 - 2"), 7));
    CHECK_FALSE(quadratic_symbolic_condition(parse_poly_text("x1^2 - 2"), 5));
    CHECK(quadratic_symbolic_condition(parse_poly_text("x1^2 + x2^2 - 1"), 2));
    // Zero constant term: the origin is always a root.
    CHECK(quadratic_symbolic_condition(parse_poly_text("x1^2 + x2^2"), 2));
    CHECK_THROWS_AS(quadratic_symbolic_condition(upoly({{0, 5}}), 7), std::domain_error);
    CHECK_THROWS_AS(quadratic_symbolic_condition(parse_poly_text("x1^3 - 2"), 7),
                    std::domain_error);
}

TEST_CASE("transcript replay: rescale, flip, translate") {
    // x^2 - 98 = 0 rescales to x^2 - 2 after pulling out 7^2.
    SparsePoly f = upoly({{0, -98}, {2, 1}});
    auto r = replay_transcript(f, 7, {"rescale 1"});
    CHECK(r.poly == upoly({{0, -2}, {2, 1}}));
    CHECK_FALSE(r.require_units);
    CHECK(verify_certificate(f, 7, witness_cert(7, 1, 3, {"rescale 1"})));

    // Flip makes x^3 + 2 into a positive binomial equation x^3 = 2.
    SparsePoly g = upoly({{0, 2}, {3, 1}});
    auto rf = replay_transcript(g, 5, {"flip 1"});
    CHECK(rf.poly == upoly({{0, 2}, {3, -1}}));
    CHECK(verify_certificate(g, 5, witness_cert(5, 1, 3, {"flip 1"})));  // 27 = 2 mod 5

    // Monomial factor x divides out without a unit requirement.
    SparsePoly h = upoly({{1, -2}, {3, 1}});  // x^3 - 2x
    auto rt = replay_transcript(h, 7, {"translate"});
    CHECK(rt.poly == upoly({{0, -2}, {2, 1}}));
    CHECK_FALSE(rt.require_units);

    // Laurent terms force unit coordinates when cleared.
    SparsePoly l = upoly({{-1, -2}, {1, 1}});  // x - 2/x
    auto rl = replay_transcript(l, 7, {"translate"});
    CHECK(rl.poly == upoly({{0, -2}, {2, 1}}));
    CHECK(rl.require_units);
    CHECK(verify_certificate(l, 7, witness_cert(7, 1, 3, {"translate"})));
}

TEST_CASE("transcript replay: zero-set and drop-free-vars") {
    SparsePoly f = bivariate_example();
    auto r = replay_transcript(f, 3, {"zero-set 2"});
    CHECK(r.poly == SparsePoly::from_terms(
                        2, {Term{Int(1), {0, 0}}, Term{Int(2), {2, 0}}}, false));
    REQUIRE(r.forced_zero.size() == 2);
    CHECK_FALSE(r.forced_zero[0]);
    CHECK(r.forced_zero[1]);

    auto rd = replay_transcript(f, 3, {"zero-set 2", "drop-free-vars"});
    CHECK(rd.poly == upoly({{0, 1}, {2, 2}}));
    REQUIRE(rd.forced_zero.size() == 1);
    CHECK_FALSE(rd.forced_zero[0]);

    // 1 + 2x^2 vanishes at x = 1 mod 3 and lifts, so the full bivariate
    // polynomial has a root with the second coordinate pinned to zero.
    CHECK(verify_certificate(f, 3, hensel_cert(3, 1, {Int(1)}, 0, 0,
                                               {"zero-set 2", "drop-free-vars"})));
    // Without dropping, the zeroed coordinate must be literally zero.
    CHECK(verify_certificate(f, 3, hensel_cert(3, 1, {Int(1), Int(0)}, 0, 0, {"zero-set 2"})));
    CHECK_FALSE(
        verify_certificate(f, 3, hensel_cert(3, 1, {Int(1), Int(1)}, 0, 0, {"zero-set 2"})));

    // Unit-requiring ops may not run while coordinates are pinned.
    CHECK_THROWS_AS(replay_transcript(f, 3, {"zero-set 2", "mono 2 1,0,0,1"}),
                    std::invalid_argument);
}

TEST_CASE("transcript replay: monomial change requires units") {
    SparsePoly f = SparsePoly::from_terms(
        2, {Term{Int(-4), {0, 0}}, Term{Int(1), {1, 1}}}, false);  // x1 x2 - 4
    auto r = replay_transcript(f, 7, {"mono 2 1,1,0,1"});
    CHECK(r.poly == SparsePoly::from_terms(
                        2, {Term{Int(-4), {0, 0}}, Term{Int(1), {2, 1}}}, false));
    CHECK(r.require_units);

    CHECK(verify_certificate(f, 7, hensel_cert(7, 1, {Int(1), Int(4)}, 0, 0,
                                               {"mono 2 1,1,0,1"})));
    // Zero coordinates are rejected once a monomial change is involved.
    CHECK_FALSE(verify_certificate(f, 7, hensel_cert(7, 1, {Int(0), Int(4)}, 1, 0,
                                                     {"mono 2 1,1,0,1"})));
    // Non-unimodular matrices are rejected during replay.
    Certificate bad = hensel_cert(7, 1, {Int(1), Int(4)}, 0, 0, {"mono 2 2,0,0,1"});
    CHECK_FALSE(verify_certificate(f, 7, bad));
}

TEST_CASE("transcript replay: scale-root and exact square division") {
    SparsePoly f = upoly({{0, -1}, {2, 4}});  // 4x^2 - 1, roots ±1/2
    auto r = replay_transcript(f, 7, {"scale-root 1/2"});
    CHECK(r.poly == upoly({{0, -4}, {2, 4}}));
    CHECK(verify_certificate(f, 7, hensel_cert(7, 1, {Int(1)}, 0, 0, {"scale-root 1/2"})));

    // (x - 3)(x - 1)^2: peel the square factor, certify the simple root.
    SparsePoly g = upoly({{0, -3}, {1, 7}, {2, -5}, {3, 1}});
    auto rq = replay_transcript(g, 5, {"divide-sq1"});
    CHECK(rq.poly == upoly({{0, -3}, {1, 1}}));
    CHECK(verify_certificate(g, 5, hensel_cert(5, 1, {Int(3)}, 0, 0, {"divide-sq1"})));
    CHECK_FALSE(verify_certificate(upoly({{3, 1}}), 5,
                                   hensel_cert(5, 1, {Int(3)}, 0, 0, {"divide-sq1"})));
}

TEST_CASE("transcript replay: reciprocal swaps the coefficient order") {
    SparsePoly f = upoly({{0, -1}, {3, 2}});  // 2x^3 - 1
    auto r = replay_transcript(f, 5, {"reciprocal"});
    CHECK(r.poly == upoly({{0, 2}, {3, -1}}));
    // x^3 = 2 has the root 3 mod 5; 1/root solves the original equation.
    CHECK(verify_certificate(f, 5, witness_cert(5, 1, 3, {"reciprocal"})));
}

TEST_CASE("transcript replay: degenerate trinomials collapse to binomials") {
    // 4 - 12x^2 + 9x^4 = (3x^2 - 2)^2 has vanishing reduced discriminant.
    SparsePoly f = upoly({{0, 4}, {2, -12}, {4, 9}});
    auto r = replay_transcript(f, 5, {"degenerate-binomial"});
    CHECK(r.poly == upoly({{0, -2}, {2, 3}}));
    // x^2 = 2/3 = 4 mod 5 has the root 2.
    CHECK(verify_certificate(f, 5, hensel_cert(5, 1, {Int(2)}, 0, 0, {"degenerate-binomial"})));
    CHECK(verify_certificate(f, 5, witness_cert(5, 1, 2, {"degenerate-binomial"})));

    // Nonvanishing discriminant: the op refuses to fire.
    SparsePoly g = upoly({{0, 1}, {2, 1}, {4, 1}});
    CHECK_THROWS_AS(replay_transcript(g, 5, {"degenerate-binomial"}), std::exception);
    CHECK_FALSE(verify_certificate(g, 5, hensel_cert(5, 1, {Int(2)}, 0, 0,
                                                     {"degenerate-binomial"})));
}

TEST_CASE("system certificates: diagonal and mixing exponent matrices") {
    Mat a = Mat::from_rows({{2, 0}, {0, 3}});
    std::vector<Rat> c = {Rat(2), Rat(1)};
    Certificate good = witness_cert(7, 1, 3);
    good.root = {Int(3), Int(2)};  // 3^2 = 2, 2^3 = 1 mod 7
    CHECK(verify_system_certificate(a, c, 7, good));

    Certificate bad = good;
    bad.root = {Int(3), Int(3)};
    CHECK_FALSE(verify_system_certificate(a, c, 7, bad));
    bad.root = {Int(3)};
    CHECK_FALSE(verify_system_certificate(a, c, 7, bad));
    bad = good;
    bad.kind = CertKind::hensel_root;
    CHECK_FALSE(verify_system_certificate(a, c, 7, bad));

    // Odd valuation on a square equation fails the Smith-form divisibility
    // test no matter the witness.
    std::vector<Rat> codd = {Rat(7), Rat(1)};
    for (long u1 = 1; u1 < 7; ++u1)
        for (long u2 = 1; u2 < 7; ++u2) {
            Certificate w = good;
            w.root = {Int(u1), Int(u2)};
            CHECK_FALSE(verify_system_certificate(a, codd, 7, w));
        }
    std::vector<Rat> czero = {Rat(0), Rat(1)};
    CHECK_FALSE(verify_system_certificate(a, czero, 7, good));

    // Unimodular system: x1 x2 = 3, x1^2 x2 = 5 pins x1 = 5/3, x2 = 9/5.
    Mat b(2, 2);
    b.at(0, 0) = 1;
    b.at(0, 1) = 2;
    b.at(1, 0) = 1;
    b.at(1, 1) = 1;
    Certificate mix = witness_cert(7, 1, 3);
    mix.root = {Int(4), Int(6)};
    CHECK(verify_system_certificate(b, {Rat(3), Rat(5)}, 7, mix));
    mix.root = {Int(4), Int(5)};
    CHECK_FALSE(verify_system_certificate(b, {Rat(3), Rat(5)}, 7, mix));
}

TEST_CASE("certificate json round trip") {
    Certificate c;
    c.kind = CertKind::hensel_root;
    c.prime = Int("340282366920938463463374607431768211507");
    c.ell = 3;
    c.root = {Int("123456789012345678901234567890"), Int(0)};
    c.deriv_index = 1;
    c.deriv_valuation = 0;
    c.transcript = {"zero-set 1", "flip 2"};
    Certificate back = certificate_from_json(certificate_to_json(c));
    CHECK(back.kind == c.kind);
    CHECK(back.prime == c.prime);
    CHECK(back.ell == c.ell);
    CHECK(back.root == c.root);
    CHECK(back.deriv_index == c.deriv_index);
    CHECK(back.deriv_valuation == c.deriv_valuation);
    CHECK(back.transcript == c.transcript);

    Certificate w = witness_cert(7, 2, 10, {"rescale 1"});
    Certificate wback = certificate_from_json(certificate_to_json(w));
    CHECK(wback.kind == CertKind::binomial_witness);
    CHECK(wback.root == std::vector<Int>{Int(10)});
    CHECK(wback.transcript == w.transcript);

    // Numeric prime/root entries parse too.
    Certificate n = certificate_from_json(
        R"({"kind":"binomial_witness","prime":7,"ell":1,"root":[3]})");
    CHECK(n.prime == 7);
    CHECK(n.root == std::vector<Int>{Int(3)});

    CHECK_THROWS(certificate_from_json("{"));
    CHECK_THROWS(certificate_from_json(R"({"kind":"bogus","prime":"7","ell":1,"root":[]})"));
    CHECK_THROWS(certificate_from_json(R"({"prime":"7","ell":1,"root":[]})"));
}

TEST_CASE("kind names round trip") {
    for (CertKind k : {CertKind::hensel_root, CertKind::binomial_witness,
                       CertKind::valuation_obstruction, CertKind::quadratic_symbolic})
        CHECK(cert_kind_from_name(cert_kind_name(k)) == k);
    CHECK_THROWS_AS(cert_kind_from_name("unknown"), std::invalid_argument);
}
