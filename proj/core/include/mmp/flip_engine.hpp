#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmp/cyclic_quotient.hpp"
#include "mmp/rng.hpp"
#include "mmp/terminal_point.hpp"

namespace mmp {

// A singular point met by the flipping curve.  `meet` is the 1-based chain
// position of the transversal intersection with the exceptional chain of the
// minimal resolution (position 1 = the chain end the normal forms are met
// at; a case-2 boundary curve crosses the far end).  Smooth germs carry
// meet = 0.
struct PointOnCurve {
    CyclicQuotientType germ;
    std::size_t meet = 0;
    std::optional<GermFamily> family;  // filled from germ_family

    // Axial multiplicity of the threefold point lying over this germ; only
    // the flip simulator consumes it.
    Int axial = 1;

    bool is_smooth() const { return germ.is_smooth(); }
};

PointOnCurve make_point_on_curve(const CyclicQuotientType& germ, std::size_t meet,
                                 const Int& axial = 1);

enum class CaseTag { Case1, Case2, Case3 };

// Local data of a flipping curve C on a closed fiber:
//   case 1: C lies in two fiber components; carries only the index data
//           (r, a) of its distinguished point (no one-surface germ exists).
//   case 2: C lies in one component and meets the double curve; the point
//           on the double curve is `boundary_meeting` (type 1/r(b,1)), plus
//           at most one further point off the double curve.
//   case 3: C lies in one component, disjoint from the double curve; one or
//           two singular points, at least one of index > 1.
struct Case1Data {
    Int r;
    Int a;
};

struct CurveConfig {
    CaseTag case_tag;
    std::vector<PointOnCurve> points;             // off-double-curve points
    std::optional<PointOnCurve> boundary_meeting; // case 2 only
    std::optional<Case1Data> case1;               // case 1 only
};

CurveConfig make_case1_config(const Int& r, const Int& a);
CurveConfig make_case2_config(const PointOnCurve& boundary,
                              const std::optional<PointOnCurve>& off_point);
CurveConfig make_case3_config(const std::vector<PointOnCurve>& points);

// (C^2) = -1 + sum of total-transform coefficients at the met curves,
// computed by the exact linear solve.  Cases 2 and 3 only.
Rat curve_self_intersection(const CurveConfig& cfg);

// (K.C) = -1 - sum of (log) discrepancies at the met curves; the boundary
// point contributes with the double curve as boundary.  Cases 2 and 3 only.
Rat k_dot_c(const CurveConfig& cfg);

// The positive integer e with b1/r1 + b2/r2 = 1 + e/(r1 r2) of a flipping
// two-point configuration; e = b1 r2 + b2 r1 - r1 r2.  Errors when the
// configuration is not flipping (e <= 0).
Int excess_e(const CurveConfig& cfg);

// Flip arithmetic at the maximal-index point P1: b1 from its germ,
// a1 = b1^{-1} mod r1, c1 = (a1 b1 - 1)/r1, plus the companion's (r2, b2).
// Smooth companions enter as (r2, b2) = (1, 1).
struct FlipParams {
    Int r1, b1, a1, c1;
    Int r2, b2, h2;
    Int e;
};
FlipParams flip_params(const CurveConfig& cfg);

// (K'.C') after the standard blowup at the maximal-index point, with the
// germ at the new intersection of C' with the exceptional divisor.
//   case 1:         exactly 0 (C' is a (-1,-1)-curve);
//   case 2a:        general solve on the residual subchain, <= 0 with
//                   equality iff C met the far-end curve;
//   case 2b / 3a:   1/(a1 r1) - e/(r1 r2), asserted <= 0 with the witness
//                   r2 <= a1 e;
//   case 3 with an interior meeting is rejected (excluded configurations).
struct PostBlowup {
    Rat value;
    bool flop;  // value == 0
    CyclicQuotientType new_germ;
};
PostBlowup post_blowup_k_dot_c(const CurveConfig& cfg);

// ---------------------------------------------------------------------------
// Exclusion sweep over the interior-meeting cases.

struct ExclusionRow {
    std::string case_name;        // "3b1" .. "3b10"
    std::optional<long> ell;      // the variable self-intersection; none for 3b2
    std::string p1_type;          // contraction type at P1 (or P2 for 3b2)
    bool passes_type_filter;
    std::optional<Rat> k_value;   // K.C for rows passing the filter
    std::string verdict;          // "excluded(type)" or "excluded(sign)"
};

struct ExclusionReport {
    long l_max;
    std::vector<ExclusionRow> rows;
    std::vector<ExclusionRow> survivors() const;
    std::string table() const;    // fixed-width text table
};

// Sweeps every interior-meeting configuration for 2 <= l <= l_max
// (3 <= l for the first case) and reports, per row, whether the contraction
// type lies in the 1/hr^2(bhr-1,1) family and, if so, the sign of K.C.
// Requires l_max >= 7.
ExclusionReport exclusion_sweep(long l_max);

// ---------------------------------------------------------------------------
// Flip-sequence simulator.

// A singular point tracked by the simulator: index r, mu_r weight a, axial
// multiplicity n.  Points of index 1 may exist in a state but can never act.
struct SimPoint {
    Int r;
    Int a;
    Int n;
    bool simple = true;
    std::uint64_t id = 0;
    Int b = 0;  // cached a^{-1} mod r; filled on first use
};

struct Measure {
    Int r_max;    // >= 1
    Int n_total;  // sum of axial multiplicities at level r_max; 0 iff r_max = 1
    friend bool operator==(const Measure&, const Measure&) = default;
    bool operator<(const Measure& o) const {  // lexicographic
        return r_max < o.r_max || (r_max == o.r_max && n_total < o.n_total);
    }
    std::string str() const { return "(" + r_max.str() + "," + n_total.str() + ")"; }
};

enum class MoveKind { Flip, Flop };

struct StepRecord {
    long step;
    MoveKind kind;
    Int acting_r, acting_n;
    Measure after;
    std::optional<Rat> k_before;  // K.C of the acting curve; absent in case 1
    Rat k_post;                   // K'.C' after the blowup
    Int discrepancy_tick;         // monotone counter, bumps at each completed flip
    std::string str() const;
};

// State of the termination simulator.  flip_step and flop_step are pure
// transitions returning new states; a state is a value and never shares
// mutable data, so independent runs parallelize trivially and a fixed seed
// makes them byte-identical.
struct FlipState {
    std::vector<SimPoint> points;
    std::optional<CurveConfig> initial_curve;  // consumed by the first flip
    std::vector<StepRecord> step_log;
    bool flop_pending = false;
    bool branch_orientation = false;  // toggled by flops
    Int discrepancy_counter = 0;
    std::uint64_t next_id = 0;
    std::uint64_t rng_state = 0;
};

FlipState make_flip_state(const std::vector<SimPoint>& points, std::uint64_t seed,
                          std::optional<CurveConfig> initial_curve = std::nullopt);
FlipState make_flip_state(const TerminalPoint& p, std::uint64_t seed);

Measure measure(const FlipState& state);

// One flip: standard blowup at the maximal-index point (largest r, then
// largest n, then lowest id), children replace it, and the continue/flop
// branch is chosen from the post-blowup K-degree.  Errors when r_max = 1 or
// when the acting point is not of simple type.  The state passes by value:
// pass a copy to keep the predecessor, move it to step in place.
FlipState flip_step(FlipState state);

// The flop on the zero branch: exchanges the two small-resolution branches;
// the measure is unchanged.  Errors off the zero branch.
FlipState flop_step(FlipState state);

struct Trace {
    std::vector<StepRecord> steps;
    Measure final_measure;
    std::string str() const;  // one line per step
};

// Iterates flip_step / flop_step until r_max = 1 or no point remains,
// asserting strict lexicographic decrease of the measure across every
// completed flip.  Exceeding max_steps is an invariant violation, surfaced
// loudly.
Trace run_sequence(const FlipState& state, long max_steps);

}  // namespace mmp
