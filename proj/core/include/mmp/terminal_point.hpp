#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmp/cyclic_quotient.hpp"

namespace mmp {

// The germ polynomial G(z^r) = sum_k g_k z^{rk} over a complete DVR with
// uniformizer tau, abstracted to tau-adic data: each present term k carries
// val = val_tau(g_k), and g_k / tau^val is a unit (DVR).  Absent k means
// g_k = 0.  Coefficient arithmetic in the base ring is never needed: every
// derived quantity (axial multiplicity, h, simple type, blowup children) is
// a function of this abstraction.
class GermSeries {
  public:
    struct Term {
        long k;    // exponent of z^r
        long val;  // tau-adic valuation of g_k
    };

    GermSeries() = default;
    explicit GermSeries(const std::vector<Term>& terms);

    const std::map<long, long>& terms() const { return terms_; }
    std::optional<long> valuation_of(long k) const;  // empty if g_k = 0
    bool has_constant_term() const { return terms_.count(0) > 0; }

    // Least k >= 1 with val(g_k) = 0, i.e. the degree of the lowest term of
    // G_s = G mod tau in z^r; empty when G_s = 0.
    std::optional<long> h_of_special_part() const;

    std::string str() const;  // "[(0,2),(1,1),(2,0)]"
    friend bool operator==(const GermSeries&, const GermSeries&) = default;

  private:
    std::map<long, long> terms_;
};

// Threefold germ xy + G(z^r) = 0 with the mu_r-action of weights (a, -a, 1)
// on (x, y, z): index r >= 2, 0 < a < r, gcd(r, a) = 1.
//
// Construction additionally requires the generic-fiber smoothness proxy:
// some term of G has valuation 0, or the constant term is present with
// finite valuation >= 1.  Immutable after construction.
struct TerminalPoint {
    Int r;
    Int a;
    GermSeries g;

    std::string str() const;
};

TerminalPoint make_terminal_point(const Int& r, const Int& a, GermSeries g);

// Index-1 germs: xyz + tau, xy + tau, or a one-parameter deformation of a
// rational double point.
struct AdeLabel {
    char series;  // 'A', 'D' or 'E'
    long index;
    std::string str() const { return std::string(1, series) + std::to_string(index); }
    friend bool operator==(const AdeLabel&, const AdeLabel&) = default;
};

struct Index1Point {
    enum class Variant { XyzTau, XyTau, Rdp };
    Variant variant;
    std::optional<AdeLabel> rdp_kind;  // present exactly for Variant::Rdp
    std::string str() const;
};

Index1Point classify_index1(const std::string& label);

Int index(const TerminalPoint& p);
Int index(const Index1Point&);

// Largest n with G mod z^r in tau^n: the valuation of the constant term
// (0 when it is a unit).  A germ without constant term has no finite axial
// multiplicity and is rejected.
Int axial_multiplicity(const TerminalPoint& p);

// Simple type: G_s = G mod tau vanishes or has a linear term in z^r.
// Returns the flag together with h = min{k >= 1 : val(g_k) = 0} when G_s != 0.
struct SimpleType {
    bool is_simple;
    std::optional<long> h;
};
SimpleType simple_type(const TerminalPoint& p);

// Discrepancy of a weighted blowup of a hypersurface germ in 4-space:
// sum(weights) - f_weight - 1.  A nonpositive result is reported as an
// error, never returned.
Rat blowup_discrepancy(const std::vector<Rat>& weights, const Rat& f_weight);

// One child singular point of the standard blowup, recorded by chart, index
// and (when the construction determines it) axial multiplicity.  No chart
// equations are invented.
struct BlowupChild {
    enum class Chart { X, Y, Z };
    Chart chart;
    Int child_index;
    std::optional<Int> axial;  // known only for the Z chart: n - 1
    std::string str() const;
};

struct BlowupResult {
    Rat discrepancy;  // always 1/r
    std::vector<BlowupChild> children;
};

// The weighted blowup with weights (1/r)(a, r-a, 1, r) at a simple-type
// point of finite axial multiplicity n >= 1.  Discrepancy 1/r; children are
// an index-a point if a > 1, an index-(r-a) point if r-a > 1, and an index-r
// point of axial multiplicity n-1 if n > 1; all of simple type again.
BlowupResult standard_blowup(const TerminalPoint& p);

// Surface germ induced on a fiber component through the point: off the
// double curve 1/hr^2(bhr-1, 1) (requires G_s != 0, which supplies h), on it
// 1/r(b, 1), where ab = 1 mod r.
CyclicQuotientType surface_germ_types(const TerminalPoint& p, bool on_double_curve);

}  // namespace mmp
