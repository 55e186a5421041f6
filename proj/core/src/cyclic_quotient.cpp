#include "mmp/cyclic_quotient.hpp"

namespace mmp {

CyclicQuotientType make_quotient(const Int& n, const Int& q) {
    if (n < 1) throw ValidationError("quotient germ requires n >= 1");
    if (n == 1) {
        if (q != 0) throw ValidationError("smooth germ must have q = 0");
        return {1, 0};
    }
    if (q < 1 || q >= n) throw ValidationError("quotient germ requires 1 <= q < n");
    if (gcd(n, q) != 1) throw ValidationError("gcd(n,q) must be 1");
    return {n, q};
}

CyclicQuotientType normalize(const Int& n, const Int& w1, const Int& w2) {
    if (n < 1) throw ValidationError("normalize requires group order n >= 1");
    Int m = n;
    Int a = w1 % m;
    if (a < 0) a += m;
    Int b = w2 % m;
    if (b < 0) b += m;
    if (m == 1) return {1, 0};

    // Remove the non-faithful kernel mu_d, d = gcd(n, w1, w2).
    Int d = gcd(gcd(m, a), b);
    if (d > 1) {
        m /= d;
        a = (a / d) % m;
        b = (b / d) % m;
        if (m == 1) return {1, 0};
    }
    if (gcd(m, b) != 1)
        throw ValidationError(
            "normalize: second weight not invertible mod " + m.str() +
            " after removing the non-faithful kernel");

    Int q = (a * mod_inverse(b, m)) % m;

    // Fold the quasi-reflection subgroup: 1/m(q,1) with g = gcd(m, q) > 1
    // is the germ 1/(m/g)(q/g, 1).
    Int g = (q == 0) ? m : gcd(m, q);
    if (g > 1) {
        m /= g;
        q /= g;
    }
    if (m == 1) return {1, 0};
    return {m, q};
}

std::vector<Rat> solve_chain_system(const std::vector<Int>& b, const std::vector<Rat>& rhs) {
    const std::size_t k = b.size();
    if (rhs.size() != k) throw ValidationError("chain system: rhs size mismatch");
    if (k == 0) return {};

    // Forward elimination on the tridiagonal matrix with diagonal -b_j and
    // unit off-diagonals.  Pivots d_j satisfy det M_j = d_1 ... d_j, so the
    // minors alternate in sign exactly when every pivot is negative.
    std::vector<Rat> d(k), y(k);
    d[0] = Rat(-b[0]);
    y[0] = rhs[0];
    for (std::size_t j = 1; j < k; ++j) {
        if (d[j - 1].sign() >= 0)
            throw InvariantViolation("chain intersection matrix is not negative definite");
        Rat m = Rat(1) / d[j - 1];
        d[j] = Rat(-b[j]) - m;
        y[j] = rhs[j] - m * y[j - 1];
    }
    if (d[k - 1].sign() >= 0)
        throw InvariantViolation("chain intersection matrix is not negative definite");

    std::vector<Rat> x(k);
    x[k - 1] = y[k - 1] / d[k - 1];
    for (std::size_t j = k - 1; j-- > 0;) x[j] = (y[j] - x[j + 1]) / d[j];
    return x;
}

namespace {

std::vector<Int> chain_entries(const CyclicQuotientType& t) {
    if (t.is_smooth()) return {};
    return hj_expand(t.n, t.q).entries();
}

// Adjunction right-hand side b_j - 2, optionally with a transversal boundary
// curve crossing position `boundary_at` (1-based; 0 = none).
std::vector<Rat> adjunction_rhs(const std::vector<Int>& b, std::size_t boundary_at) {
    std::vector<Rat> rhs(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) rhs[j] = Rat(b[j] - 2);
    if (boundary_at >= 1) rhs[boundary_at - 1] += Rat(1);
    return rhs;
}

void check_position(const std::vector<Int>& b, std::size_t j0) {
    if (j0 < 1 || j0 > b.size()) throw ValidationError("chain position out of range");
}

}  // namespace

ResolutionChain resolve(const CyclicQuotientType& t) {
    if (t.is_smooth()) return {HJChain::empty(), {}};
    HJChain chain = hj_expand(t.n, t.q);
    std::vector<Rat> a = solve_chain_system(chain.entries(), adjunction_rhs(chain.entries(), 0));
    for (const Rat& aj : a)
        if (aj <= Rat(-1) || aj > Rat(0))
            throw InvariantViolation("discrepancy " + aj.str() + " outside (-1, 0]");
    return {std::move(chain), std::move(a)};
}

std::vector<Rat> ResolutionChain::pullback_of(std::size_t j0) const {
    const auto& b = self_intersections.entries();
    check_position(b, j0);
    std::vector<Rat> rhs(b.size(), Rat(0));
    rhs[j0 - 1] = Rat(-1);
    return solve_chain_system(b, rhs);
}

Rat log_discrepancy_at_meeting(const CyclicQuotientType& t, std::size_t j0) {
    if (t.is_smooth()) return Rat(0);
    ResolutionChain rc = resolve(t);
    check_position(rc.self_intersections.entries(), j0);
    return rc.discrepancies[j0 - 1];
}

Rat boundary_log_discrepancy_at_meeting(const CyclicQuotientType& t, std::size_t j0) {
    if (t.is_smooth()) return Rat(0);
    std::vector<Int> b = chain_entries(t);
    check_position(b, j0);
    std::vector<Rat> a = solve_chain_system(b, adjunction_rhs(b, b.size()));
    return a[j0 - 1];
}

Rat pullback_coefficient(const CyclicQuotientType& t, std::size_t j0) {
    if (t.is_smooth()) return Rat(0);  // no exceptional curves
    ResolutionChain rc = resolve(t);
    return rc.pullback_of(j0)[j0 - 1];
}

Int gorenstein_index(const CyclicQuotientType& t) {
    return t.n / gcd(t.n, t.q + 1);
}

std::optional<GermFamily> germ_family(const CyclicQuotientType& t) {
    if (t.is_smooth()) return std::nullopt;
    std::optional<GermFamily> found;
    // Scan all r with r^2 | n; uniqueness of a hit is asserted, not assumed.
    for (Int r = 2; r * r <= t.n; ++r) {
        if (t.n % (r * r) != 0) continue;
        Int h = t.n / (r * r);
        if ((t.q + 1) % (h * r) != 0) continue;
        Int b = (t.q + 1) / (h * r);
        if (b <= 0 || b >= r || gcd(r, b) != 1) continue;
        if (found)
            throw InvariantViolation("non-unique (h,r,b) for " + t.str());
        found = GermFamily{h, r, b};
    }
    return found;
}

CyclicQuotientType contract_chain(const HJChain& chain) {
    if (chain.is_empty()) return {1, 0};
    auto [n, q] = hj_evaluate(chain);
    return make_quotient(n, q);
}

}  // namespace mmp
