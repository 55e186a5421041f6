#pragma once

#include <optional>
#include <vector>

#include "mmp/numbers.hpp"

namespace mmp {

// Normalized cyclic quotient surface germ 1/n(q,1).
//   n == 1  <=>  smooth germ (q == 0);
//   n >= 2  =>   1 <= q < n and gcd(n, q) = 1.
// Values are immutable; every operation below is a pure function of the type.
struct CyclicQuotientType {
    Int n;
    Int q;

    bool is_smooth() const { return n == 1; }
    std::string str() const { return "1/" + n.str() + "(" + q.str() + ",1)"; }
    friend bool operator==(const CyclicQuotientType&, const CyclicQuotientType&) = default;
};

// Reduces the germ 1/n(w1,w2) to the normalized form above: divides out the
// non-faithful kernel, inverts the second weight, and folds the
// quasi-reflection subgroup.  Rejects weights whose second component stays
// non-invertible after the kernel is removed.
CyclicQuotientType make_quotient(const Int& n, const Int& q);  // already-normal input
CyclicQuotientType normalize(const Int& n, const Int& w1, const Int& w2);

// Minimal-resolution data of a quotient germ.
//
// Chain positions are 1-based in hj_expand(n, q) order: position 1 is the
// end whose ray is (q/n, 1/n), i.e. the curve met by a transversal through
// the first coordinate axis.  Configurations built from the normal forms
// below meet their germ at position 1; a boundary curve through the germ
// (the double-curve case) is transversal at the far end, position size().
struct ResolutionChain {
    HJChain self_intersections;
    std::vector<Rat> discrepancies;  // K_V = a*K + sum a_j F_j, all in (-1, 0]

    // Coefficients c_j of the total transform of a curve meeting the chain
    // transversally at position j0: solves sum_k c_k (F_k.F_j) = -delta_{j,j0}.
    std::vector<Rat> pullback_of(std::size_t j0) const;
};

ResolutionChain resolve(const CyclicQuotientType& t);

// Discrepancy a_{j0} of resolve(t); 0 for the smooth germ.  For the germ
// 1/hr^2(bhr-1,1) met at position 1 this equals b/r - 1.
Rat log_discrepancy_at_meeting(const CyclicQuotientType& t, std::size_t j0);

// Same, for the pair (K + D) where the boundary D crosses the chain
// transversally at the far end.  For 1/r(b,1) met at position 1 this equals
// b/r - 1.
Rat boundary_log_discrepancy_at_meeting(const CyclicQuotientType& t, std::size_t j0);

// Coefficient of the total transform at the met curve; q/n at position 1,
// 0 for the smooth germ.
Rat pullback_coefficient(const CyclicQuotientType& t, std::size_t j0);

// Least m >= 1 with m(q+1) = 0 mod n; equals n / gcd(n, q+1).
Int gorenstein_index(const CyclicQuotientType& t);

// Parameters of the family 1/hr^2(bhr-1, 1): h, r >= 2, 0 < b < r,
// gcd(r, b) = 1.
struct GermFamily {
    Int h;
    Int r;
    Int b;
    friend bool operator==(const GermFamily&, const GermFamily&) = default;
    std::string str() const {
        return "(h,r,b)=(" + h.str() + "," + r.str() + "," + b.str() + ")";
    }
};

// Unique (h, r, b) with n = hr^2 and q = bhr - 1 if the germ belongs to the
// family; empty otherwise.  Established by exhaustive scan over the divisor
// candidates r.
std::optional<GermFamily> germ_family(const CyclicQuotientType& t);

// hj_evaluate wrapped as a normalized type; left inverse of resolve.
CyclicQuotientType contract_chain(const HJChain& chain);

// Exact tridiagonal solve against the chain intersection matrix
// (diagonal -b_j, off-diagonal 1).  Throws InvariantViolation if a leading
// principal minor fails the negative-definiteness sign alternation.
std::vector<Rat> solve_chain_system(const std::vector<Int>& self_intersections,
                                    const std::vector<Rat>& rhs);

}  // namespace mmp
