#include <algorithm>

#include "mmp/flip_engine.hpp"

namespace mmp {

namespace {

void validate_sim_point(const SimPoint& p) {
    if (p.r < 1) throw ValidationError("point index must be >= 1");
    if (p.r > Int(1) << 32) throw ValidationError("point index out of supported range");
    if (p.n < 1) throw ValidationError("axial multiplicity must be >= 1");
    if (p.r == 1) {
        if (p.a != 0) throw ValidationError("index-1 point carries no weight (a must be 0)");
    } else if (p.a <= 0 || p.a >= p.r || gcd(p.r, p.a) != 1) {
        throw ValidationError("point weight requires 0 < a < r with gcd(r,a) = 1");
    }
}

// Index of the acting point: largest r, then largest n, then lowest id.
std::size_t acting_index(const std::vector<SimPoint>& pts) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const SimPoint &p = pts[i], &b = pts[best];
        if (p.r > b.r || (p.r == b.r && (p.n > b.n || (p.n == b.n && p.id < b.id))))
            best = i;
    }
    return best;
}

Int draw_coprime_weight(DetRng& rng, const Int& idx) {
    if (idx == 2) return 1;
    // idx is bounded by the largest index in play; instance validation keeps
    // it within uint64 range.
    std::uint64_t m = static_cast<std::uint64_t>(idx);
    for (int tries = 0; tries < 128; ++tries) {
        Int w = Int(rng.range(1, m - 1));
        if (gcd(w, idx) == 1) return w;
    }
    // Deterministic fallback: first coprime from a drawn start.
    Int w = Int(rng.range(1, m - 1));
    while (gcd(w, idx) != 1) w = w % (idx - 1) + 1;
    return w;
}

}  // namespace

FlipState make_flip_state(const std::vector<SimPoint>& points, std::uint64_t seed,
                          std::optional<CurveConfig> initial_curve) {
    FlipState st;
    st.rng_state = seed;
    for (SimPoint p : points) {
        validate_sim_point(p);
        p.id = st.next_id++;
        p.b = p.r >= 2 ? mod_inverse(p.a, p.r) : Int(0);
        st.points.push_back(std::move(p));
    }
    if (initial_curve && initial_curve->case_tag == CaseTag::Case1) {
        const Case1Data& c1 = *initial_curve->case1;
        bool found = false;
        for (const auto& p : st.points) found = found || (p.r == c1.r && p.a == c1.a);
        if (!found)
            throw ValidationError(
                "case-1 initial curve names a point absent from the state");
    }
    st.initial_curve = std::move(initial_curve);
    return st;
}

FlipState make_flip_state(const TerminalPoint& p, std::uint64_t seed) {
    SimPoint sp{p.r, p.a, axial_multiplicity(p), simple_type(p).is_simple, 0};
    return make_flip_state({sp}, seed);
}

Measure measure(const FlipState& state) {
    if (state.points.empty()) return {1, 0};
    Int r_max = 1;
    for (const auto& p : state.points) r_max = std::max(r_max, p.r);
    if (r_max == 1) return {1, 0};
    Int n_total = 0;
    for (const auto& p : state.points)
        if (p.r == r_max) n_total += p.n;
    return {r_max, n_total};
}

FlipState flip_step(FlipState state) {
    if (state.flop_pending)
        throw ValidationError("a flop is pending; apply flop_step first");
    Measure m = measure(state);
    if (m.r_max == 1)
        throw ValidationError(
            "no index-1 flipping curve exists: flip_step requires r_max > 1");

    FlipState next = std::move(state);
    DetRng rng(next.rng_state);
    const std::size_t ai = acting_index(next.points);
    const SimPoint acting = next.points[ai];
    if (!acting.simple)
        throw ValidationError(
            "maximal-index point is not of simple type: out-of-scope reduction");

    // K-degrees of the current flipping curve.  With an explicit initial
    // configuration they come from the exact engine; the synthesized curves
    // are chain-end family configurations, where the closed forms agree with
    // the linear solve.
    std::optional<Rat> k_before;
    Rat k_post;
    if (next.initial_curve) {
        const CurveConfig& cfg = *next.initial_curve;
        if (cfg.case_tag == CaseTag::Case1) {
            if (cfg.case1->r != acting.r || cfg.case1->a != acting.a)
                throw ValidationError(
                    "case-1 initial curve does not pass through the acting point");
        } else {
            Rat k = k_dot_c(cfg);
            if (k.sign() >= 0)
                throw ValidationError("initial curve is not flipping: K.C = " + k.str());
            k_before = k;
        }
        k_post = post_blowup_k_dot_c(cfg).value;
        next.initial_curve.reset();
    } else {
        const Int b1 = acting.b != 0 ? acting.b : mod_inverse(acting.a, acting.r);
        const Int a1 = acting.a;  // inverse of b1 mod r
        Int r2 = 1, b2 = 1;
        // Companion: the strongest other point, if it keeps the synthesized
        // two-point curve flipping and contractible; otherwise an arbitrary
        // smooth point.
        std::size_t ci = next.points.size();
        for (std::size_t i = 0; i < next.points.size(); ++i) {
            if (i == ai) continue;
            const SimPoint& cand = next.points[i];
            if (cand.r < 2 || cand.r > acting.r || !cand.simple) continue;
            if (ci == next.points.size()) {
                ci = i;
                continue;
            }
            const SimPoint& best = next.points[ci];
            if (cand.r > best.r || (cand.r == best.r &&
                                    (cand.n > best.n ||
                                     (cand.n == best.n && cand.id < best.id))))
                ci = i;
        }
        if (ci != next.points.size()) {
            const SimPoint& cand = next.points[ci];
            Int cb = cand.b != 0 ? cand.b : mod_inverse(cand.a, cand.r);
            Int ce = b1 * cand.r + cb * acting.r - acting.r * cand.r;
            if (ce > 0) {  // flipping with this companion
                Rat c2 = Rat(-1) + Rat(b1 * acting.r - 1, acting.r * acting.r) +
                         Rat(cb * cand.r - 1, cand.r * cand.r);
                if (c2.sign() < 0) {  // contractible
                    r2 = cand.r;
                    b2 = cb;
                }
            }
        }
        const Int e = b1 * r2 + b2 * acting.r - acting.r * r2;
        if (e <= 0) throw InvariantViolation("synthesized curve is not flipping");
        k_before = Rat(-e, acting.r * r2);
        k_post = Rat(1, a1 * acting.r) - Rat(e, acting.r * r2);
        if (k_post.sign() > 0)
            throw InvariantViolation("(K'.C') > 0 in the simulator");
    }

    // Standard blowup outcome: the acting point is replaced by its children.
    // Vector position carries no meaning (ordering is by id), so swap-erase.
    std::vector<SimPoint> children;
    if (acting.a > 1) {
        Int w = draw_coprime_weight(rng, acting.a);
        children.push_back(
            SimPoint{acting.a, w, 1, true, next.next_id++, mod_inverse(w, acting.a)});
    }
    if (acting.r - acting.a > 1) {
        Int idx = acting.r - acting.a;
        Int w = draw_coprime_weight(rng, idx);
        children.push_back(SimPoint{idx, w, 1, true, next.next_id++, mod_inverse(w, idx)});
    }
    if (acting.n > 1)
        children.push_back(SimPoint{acting.r, acting.a, acting.n - 1, true, next.next_id++,
                                    acting.b != 0 ? acting.b : mod_inverse(acting.a, acting.r)});

    next.points[ai] = std::move(next.points.back());
    next.points.pop_back();
    for (auto& c : children) next.points.push_back(std::move(c));

    next.rng_state = rng.state();
    next.discrepancy_counter += 1;
    next.flop_pending = k_post.is_zero();
    long step_no = static_cast<long>(next.step_log.size()) + 1;
    next.step_log.push_back(StepRecord{step_no, MoveKind::Flip, acting.r, acting.n,
                                       measure(next), k_before, k_post,
                                       next.discrepancy_counter});
    return next;
}

FlipState flop_step(FlipState state) {
    if (!state.flop_pending)
        throw ValidationError("flop_step applied off the zero branch");
    if (state.step_log.empty())
        throw ValidationError("flop-pending state without a preceding flip");
    FlipState next = std::move(state);
    next.flop_pending = false;
    next.branch_orientation = !next.branch_orientation;  // small-resolution tag swap
    Int last_r = next.step_log.back().acting_r;
    Int last_n = next.step_log.back().acting_n;
    long step_no = static_cast<long>(next.step_log.size()) + 1;
    next.step_log.push_back(StepRecord{step_no, MoveKind::Flop, std::move(last_r),
                                       std::move(last_n), measure(next), Rat(0), Rat(0),
                                       next.discrepancy_counter});
    return next;
}

std::string StepRecord::str() const {
    std::string s = "step=" + std::to_string(step);
    s += kind == MoveKind::Flip ? " kind=FLIP" : " kind=FLOP";
    s += " point=(" + acting_r.str() + "," + acting_n.str() + ")";
    s += " measure=" + after.str();
    s += " kC=" + (k_before ? k_before->str() : "-");
    s += " post=" + k_post.str();
    s += " tick=" + discrepancy_tick.str();
    return s;
}

std::string Trace::str() const {
    std::string out;
    for (const auto& rec : steps) {
        out += rec.str();
        out += "\n";
    }
    out += "final measure=" + final_measure.str() + "\n";
    return out;
}

Trace run_sequence(const FlipState& initial, long max_steps) {
    FlipState state = initial;
    long steps = 0;
    while (true) {
        if (state.flop_pending) {
            if (++steps > max_steps)
                throw InvariantViolation(
                    "max_steps exceeded: flip sequence failed to terminate");
            Measure before = measure(state);
            state = flop_step(std::move(state));
            if (!(measure(state) == before))
                throw InvariantViolation("flop changed the termination measure");
            continue;
        }
        Measure before = measure(state);
        if (before.r_max == 1) break;
        if (++steps > max_steps)
            throw InvariantViolation(
                "max_steps exceeded: flip sequence failed to terminate");
        state = flip_step(std::move(state));
        if (!(measure(state) < before))
            throw InvariantViolation(
                "termination measure did not decrease across a completed flip");
    }
    Measure final = measure(state);
    return {std::move(state.step_log), final};
}

}  // namespace mmp
