#pragma once

#include <tuple>
#include <vector>

#include "mmp/rational.hpp"

namespace mmp {

// Extended gcd: returns (g, x, y) with g = gcd(a,b) > 0 and a*x + b*y = g.
// Rejects (0, 0).
std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b);

// Inverse of a modulo n (n >= 2), in [1, n-1].  Requires gcd(a, n) = 1.
Int mod_inverse(const Int& a, const Int& n);

// Hirzebruch-Jung chain: the entries b_i of the minus continued fraction
//   n/q = b_1 - 1/(b_2 - 1/(... - 1/b_k)),   all b_i >= 2,
// equivalently the |F_j^2| of the exceptional curves resolving the cyclic
// quotient germ 1/n(q,1).  Nonempty by construction; the resolution of a
// smooth germ is represented by HJChain::empty().
class HJChain {
  public:
    explicit HJChain(std::vector<Int> entries);
    static HJChain empty() { return HJChain(); }

    const std::vector<Int>& entries() const { return entries_; }
    bool is_empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const Int& at(std::size_t pos1) const;  // 1-based

    friend bool operator==(const HJChain&, const HJChain&) = default;

    std::string str() const;  // "[2,3,2]"

  private:
    HJChain() = default;
    std::vector<Int> entries_;
};

// Minus-continued-fraction expansion of n/q for n >= 2, 0 < q < n,
// gcd(n,q) = 1.
HJChain hj_expand(const Int& n, const Int& q);

// Evaluates a chain back to the coprime pair (n, q); inverse of hj_expand.
std::pair<Int, Int> hj_evaluate(const HJChain& chain);

}  // namespace mmp
