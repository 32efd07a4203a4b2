#include "padfeas/solve.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace padfeas {

namespace {

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

}  // namespace

FeasibilityVerdict feas_quadratic_diagonal(const SparsePoly& f, const Int& p) {
    PadicContext gate(p, 1);
    (void)gate;

    // Shape: a nonzero constant plus one square term per variable.
    const Term* c0t = f.constant_term();
    if (c0t == nullptr)
        throw std::invalid_argument(
            "feas_quadratic_diagonal: zero constant coefficient rejected (eliminate it first)");
    std::vector<Int> squares(f.nvars, Int(0));
    for (const Term& t : f.terms) {
        int nz = 0;
        unsigned var = 0;
        for (unsigned i = 0; i < f.nvars; ++i) {
            if (t.exps[i] != 0) {
                ++nz;
                var = i;
            }
        }
        if (nz == 0) continue;
        if (nz != 1 || t.exps[var] != 2)
            throw std::invalid_argument("feas_quadratic_diagonal: not a diagonal quadratic");
        squares[var] = t.coeff;
    }
    for (unsigned i = 0; i < f.nvars; ++i)
        if (squares[i] == 0)
            throw std::invalid_argument("feas_quadratic_diagonal: variable x" +
                                        std::to_string(i + 1) +
                                        " has no square term (eliminate unused variables)");
    if (f.nvars == 0)
        throw std::invalid_argument("feas_quadratic_diagonal: no square terms");

    const Int c0 = c0t->coeff;
    const std::size_t n = squares.size();
    bool feasible = quadratic_symbolic_condition(f, p);

    std::vector<std::string> lines;
    if (n >= 4) {
        lines.push_back("n >= 4: always solvable");
    } else if (n == 1) {
        Rat target = Rat(-c0) / squares[0];
        lines.push_back("ord_p(-c0/c1) = " + std::to_string(ord_p(target, p).value()));
    } else {
        Rat d = 1;
        for (const Int& ci : squares) d *= ci;
        int eps = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                eps *= hilbert(Rat(squares[i]), Rat(squares[j]), p);
        lines.push_back("eps = " + sign_text(eps));
        if (n == 2) {
            lines.push_back("hilbert(-c0,-d) = " + sign_text(hilbert(Rat(-c0), -d, p)));
        } else {
            lines.push_back(std::string("square-class c0*d: ") +
                            (ord_p(Rat(c0) * d, p).value() % 2 == 0 ? "even ord" : "odd ord"));
            lines.push_back("hilbert(-1,-d) = " + sign_text(hilbert(Rat(-1), -d, p)));
        }
    }
    lines.push_back(feasible ? "quadratic feasible" : "quadratic infeasible");

    Certificate cert;
    cert.kind = CertKind::quadratic_symbolic;
    cert.prime = p;
    cert.ell = 1;
    cert.transcript = std::move(lines);
    return {feasible ? Feasibility::Feasible : Feasibility::Infeasible, cert,
            feasible ? "closed-form symbol conditions hold"
                     : "closed-form symbol conditions exclude every square class"};
}

}  // namespace padfeas
