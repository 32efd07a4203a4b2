#include "lift_search.hpp"

#include <stdexcept>
#include <utility>

namespace padfeas::detail {

namespace {

// Ascending odometer over [0, p)^n starting after the all-zeros tuple;
// returns false once the tuple wraps around.
bool next_digit_tuple(std::vector<Int>& d, const Int& p) {
    for (std::size_t i = d.size(); i-- > 0;) {
        ++d[i];
        if (d[i] < p) return true;
        d[i] = 0;
    }
    return false;
}

}  // namespace

LiftOutcome lift_search(const SparsePoly& f, const Int& p, const LiftConfig& cfg) {
    if (f.is_zero()) throw std::invalid_argument("lift_search: zero polynomial");
    if (f.nvars == 0) throw std::invalid_argument("lift_search: no variables");
    if (cfg.max_depth < 1) throw std::invalid_argument("lift_search: max_depth must be >= 1");
    if (!cfg.unit_coords.empty() && cfg.unit_coords.size() != f.nvars)
        throw std::invalid_argument("lift_search: unit mask size mismatch");

    const unsigned n = f.nvars;
    std::vector<PadicContext> ctx;  // ctx[j-1] works mod p^j
    ctx.reserve(static_cast<std::size_t>(cfg.max_depth));
    for (long j = 1; j <= cfg.max_depth; ++j) ctx.emplace_back(p, j);
    const std::vector<SparsePoly> parts = partials(f);

    LiftOutcome out;
    bool closed = false, budget_hit = false, any_live = false;

    // A frame enumerates the children r + p^level * delta of one node; the
    // virtual level-0 frame (modulus 1) generates the level-1 residues.
    struct Frame {
        std::vector<Int> r;
        long level;
        Int step;  // p^level
        std::vector<Int> delta;
        bool first;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{std::vector<Int>(n, 0), 0, Int(1), std::vector<Int>(n, 0), true});

    // Closure / live handling for a satisfied node; pushes its child frame
    // when the node needs expanding.
    auto enter_node = [&](std::vector<Int> r, long level) {
        const PadicContext& c = ctx[static_cast<std::size_t>(level - 1)];
        long best_k = -1;
        long best_i = -1;
        for (unsigned i = 0; i < n; ++i) {
            if (parts[i].is_zero()) continue;
            Int dv = evaluate_mod(parts[i], r, c);
            if (dv == 0) continue;  // valuation not determined at this level
            long k = ord_p(dv, p).value();
            if (best_k < 0 || k < best_k) {
                best_k = k;
                best_i = i;
            }
        }
        if (best_k >= 0 && 2 * best_k + 1 <= level) {
            out.kind = LiftOutcome::Kind::closure_found;
            out.root = std::move(r);
            out.level = level;
            out.deriv_index = best_i;
            out.deriv_valuation = best_k;
            closed = true;
            return;
        }
        if (level >= cfg.max_depth) {
            any_live = true;
            if (cfg.collect_live &&
                out.live_roots.size() < static_cast<std::size_t>(cfg.live_cap))
                out.live_roots.push_back(std::move(r));
            return;
        }
        stack.push_back(Frame{std::move(r), level, c.modulus, std::vector<Int>(n, 0), true});
    };

    while (!stack.empty() && !closed && !budget_hit) {
        Frame& fr = stack.back();
        if (fr.first) {
            fr.first = false;
        } else if (!next_digit_tuple(fr.delta, p)) {
            stack.pop_back();
            continue;
        }
        if (++out.nodes > cfg.node_budget) {
            budget_hit = true;
            break;
        }
        if (fr.level == 0 && !cfg.unit_coords.empty()) {
            bool skip = false;
            for (unsigned i = 0; i < n && !skip; ++i)
                if (cfg.unit_coords[i] && fr.delta[i] == 0) skip = true;
            if (skip) continue;
        }
        std::vector<Int> child(n);
        for (unsigned i = 0; i < n; ++i) child[i] = fr.r[i] + fr.step * fr.delta[i];
        const long child_level = fr.level + 1;
        Int value;
        try {
            value = evaluate_mod(f, child, ctx[static_cast<std::size_t>(child_level - 1)]);
        } catch (const std::domain_error&) {
            continue;  // outside the Laurent domain (non-unit at a negative exponent)
        }
        if (value == 0) enter_node(std::move(child), child_level);
    }

    if (closed) return out;
    if (budget_hit)
        out.kind = LiftOutcome::Kind::budget_exceeded;
    else
        out.kind = any_live ? LiftOutcome::Kind::live_at_depth : LiftOutcome::Kind::exhausted;
    return out;
}

}  // namespace padfeas::detail
