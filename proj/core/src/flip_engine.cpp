#include "mmp/flip_engine.hpp"

#include <algorithm>

namespace mmp {

PointOnCurve make_point_on_curve(const CyclicQuotientType& germ, std::size_t meet,
                                 const Int& axial) {
    if (axial < 1) throw ValidationError("axial multiplicity must be >= 1");
    if (germ.is_smooth()) {
        if (meet != 0)
            throw ValidationError("a smooth point meets no exceptional chain (meet must be 0)");
        return {germ, 0, std::nullopt, axial};
    }
    std::size_t len = hj_expand(germ.n, germ.q).size();
    if (meet < 1 || meet > len)
        throw ValidationError("meeting position " + std::to_string(meet) +
                              " out of range for chain of length " + std::to_string(len));
    return {germ, meet, germ_family(germ), axial};
}

CurveConfig make_case1_config(const Int& r, const Int& a) {
    if (r < 2) throw ValidationError("case-1 curve requires an index >= 2 point");
    if (a <= 0 || a >= r || gcd(r, a) != 1)
        throw ValidationError("case-1 point requires 0 < a < r with gcd(r,a) = 1");
    return {CaseTag::Case1, {}, std::nullopt, Case1Data{r, a}};
}

CurveConfig make_case2_config(const PointOnCurve& boundary,
                              const std::optional<PointOnCurve>& off_point) {
    if (boundary.is_smooth())
        throw ValidationError("case-2 boundary point must be singular");
    CurveConfig cfg{CaseTag::Case2, {}, boundary, std::nullopt};
    if (off_point) cfg.points.push_back(*off_point);
    return cfg;
}

CurveConfig make_case3_config(const std::vector<PointOnCurve>& points) {
    if (points.empty() || points.size() > 2)
        throw ValidationError("case-3 curve carries one or two points");
    std::size_t singular = 0;
    for (const auto& p : points)
        if (!p.is_smooth()) ++singular;
    if (singular == 0)
        throw ValidationError(
            "case-3 curve with only index-1 points cannot be flipping");
    return {CaseTag::Case3, points, std::nullopt, std::nullopt};
}

namespace {

std::vector<const PointOnCurve*> all_points(const CurveConfig& cfg) {
    std::vector<const PointOnCurve*> out;
    if (cfg.boundary_meeting) out.push_back(&*cfg.boundary_meeting);
    for (const auto& p : cfg.points) out.push_back(&p);
    return out;
}

void require_surface_case(const CurveConfig& cfg, const char* op) {
    if (cfg.case_tag == CaseTag::Case1)
        throw ValidationError(std::string(op) +
                              ": no one-surface formula applies in case 1");
}

// (h, r, b) view of a companion point: the family triple when the germ is
// of type 1/hr^2(bhr-1,1); (n, 1, 1) for A-type germs 1/n(n-1,1); (1, 1, 1)
// for smooth points.
struct HrB {
    Int h, r, b;
};

HrB companion_params(const PointOnCurve& p) {
    if (p.is_smooth()) return {1, 1, 1};
    if (p.family) return {p.family->h, p.family->r, p.family->b};
    if (p.germ.q == p.germ.n - 1) return {p.germ.n, 1, 1};
    throw ValidationError("point of type " + p.germ.str() +
                          " is neither of type 1/hr^2(bhr-1,1) nor a rational "
                          "double point of type A");
}

}  // namespace

Rat curve_self_intersection(const CurveConfig& cfg) {
    require_surface_case(cfg, "curve_self_intersection");
    Rat sum(-1);
    for (const PointOnCurve* p : all_points(cfg))
        if (!p->is_smooth()) sum += pullback_coefficient(p->germ, p->meet);
    return sum;
}

Rat k_dot_c(const CurveConfig& cfg) {
    require_surface_case(cfg, "k_dot_c");
    Rat sum(-1);
    if (cfg.boundary_meeting && !cfg.boundary_meeting->is_smooth())
        sum -= boundary_log_discrepancy_at_meeting(cfg.boundary_meeting->germ,
                                                   cfg.boundary_meeting->meet);
    for (const auto& p : cfg.points)
        if (!p.is_smooth()) sum -= log_discrepancy_at_meeting(p.germ, p.meet);
    return sum;
}

FlipParams flip_params(const CurveConfig& cfg) {
    require_surface_case(cfg, "flip_params");
    Int r1, b1;
    HrB p2{1, 1, 1};
    if (cfg.case_tag == CaseTag::Case2) {
        // The boundary point carries the maximal index (1/r(b,1) is always
        // of simple type).
        r1 = cfg.boundary_meeting->germ.n;
        b1 = cfg.boundary_meeting->germ.q;
        if (!cfg.points.empty()) p2 = companion_params(cfg.points[0]);
    } else {
        // Case 3: the blown-up point is the maximal-index one; it must lie
        // in the h = 1 part of the family (simple type).
        std::vector<HrB> ps;
        for (const auto& p : cfg.points)
            ps.push_back(p.is_smooth() ? HrB{1, 1, 1} : companion_params(p));
        std::size_t i1 = 0;
        for (std::size_t i = 1; i < ps.size(); ++i)
            if (ps[i].r > ps[i1].r || (ps[i].r == ps[i1].r && ps[i].h < ps[i1].h)) i1 = i;
        if (ps[i1].r < 2)
            throw ValidationError("case-3 configuration has no point of index > 1");
        if (ps[i1].h != 1)
            throw ValidationError(
                "maximal-index point has h = " + ps[i1].h.str() +
                " > 1: not of simple type (out-of-scope reduction)");
        r1 = ps[i1].r;
        b1 = ps[i1].b;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (i != i1) p2 = ps[i];
    }
    Int a1 = mod_inverse(b1, r1);
    Int c1 = (a1 * b1 - 1) / r1;
    Int e = b1 * p2.r + p2.b * r1 - r1 * p2.r;
    return {r1, b1, a1, c1, p2.r, p2.b, p2.h, e};
}

Int excess_e(const CurveConfig& cfg) {
    FlipParams fp = flip_params(cfg);
    if (fp.e <= 0)
        throw ValidationError("configuration is not flipping: e = " + fp.e.str() +
                              " <= 0 (K.C >= 0)");
    return fp.e;
}

namespace {

// General route for case (2a): the blowup extracts the far-end curve E1 of
// the boundary chain.  C' meets E1 directly when C met that curve (K'.C'
// is then 0), and otherwise passes through the contraction of the residual
// subchain, whose log discrepancies are solved with E1 as boundary.
PostBlowup post_blowup_case2a(const CurveConfig& cfg) {
    const PointOnCurve& bp = *cfg.boundary_meeting;
    std::vector<Int> chain = hj_expand(bp.germ.n, bp.germ.q).entries();
    const std::size_t d1 = chain.size();

    Rat companion(0);  // discrepancy term of the off-curve point
    if (!cfg.points.empty() && !cfg.points[0].is_smooth())
        companion = log_discrepancy_at_meeting(cfg.points[0].germ, cfg.points[0].meet);

    if (bp.meet == d1) {
        // C met the extracted curve; C' crosses E1 at a smooth point.
        return {Rat(0) - companion, companion.is_zero(), CyclicQuotientType{1, 0}};
    }
    std::vector<Int> sub(chain.begin(), chain.end() - 1);
    std::vector<Rat> rhs(sub.size());
    for (std::size_t j = 0; j < sub.size(); ++j) rhs[j] = Rat(sub[j] - 2);
    rhs.back() += Rat(1);  // E1 crosses the subchain at its far end
    std::vector<Rat> a = solve_chain_system(sub, rhs);
    Rat value = Rat(-1) - a[bp.meet - 1] - companion;
    return {value, value.is_zero(), contract_chain(HJChain(std::move(sub)))};
}

}  // namespace

PostBlowup post_blowup_k_dot_c(const CurveConfig& cfg) {
    if (cfg.case_tag == CaseTag::Case1)
        return {Rat(0), true, CyclicQuotientType{1, 0}};  // C' is a (-1,-1)-curve

    if (cfg.case_tag == CaseTag::Case3) {
        for (const auto& p : cfg.points)
            if (!p.is_smooth() && p.meet != 1)
                throw ValidationError(
                    "interior chain meeting in case 3: configuration is excluded");
    } else {
        // Case 2.  A singular companion forces the end meeting on the
        // boundary chain; an index-1 companion is the general (2a) shape.
        bool companion_singular =
            !cfg.points.empty() && !cfg.points[0].is_smooth() &&
            companion_params(cfg.points[0]).r >= 2;
        if (!companion_singular) return post_blowup_case2a(cfg);
        if (cfg.boundary_meeting->meet != 1)
            throw ValidationError(
                "interior boundary-chain meeting with a singular companion "
                "is not a valid flipping-curve configuration");
        if (!cfg.points.empty() && cfg.points[0].meet != 1)
            throw ValidationError(
                "interior chain meeting at the companion point is excluded");
    }

    FlipParams fp = flip_params(cfg);
    if (fp.e <= 0)
        throw ValidationError("configuration is not flipping: e = " + fp.e.str() + " <= 0");
    if (fp.r2 > fp.a1 * fp.e) {
        // r2 <= a1 e follows from r2 <= r1 and the congruence r2 = a1 e
        // (mod r1); in case 3 the maximal point is chosen here, so only
        // case-2 data whose boundary point is not maximal can reach this.
        if (cfg.case_tag == CaseTag::Case2)
            throw ValidationError(
                "boundary point does not carry the maximal index (r2 > a1 e): "
                "no contractible flipping curve has this configuration");
        throw InvariantViolation("witness failure: r2 > a1 e");
    }
    Rat value = Rat(1, fp.a1 * fp.r1) - Rat(fp.e, fp.r1 * fp.r2);
    if (value.sign() > 0)
        throw InvariantViolation("(K'.C') = " + value.str() + " > 0 contradicts r2 <= a1 e");
    CyclicQuotientType new_germ =
        fp.a1 == 1 ? CyclicQuotientType{1, 0} : make_quotient(fp.a1, fp.c1);
    return {value, value.is_zero(), new_germ};
}

}  // namespace mmp
