#include "mmp/numbers.hpp"

#include <utility>

namespace mmp {

std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw ValidationError("ext_gcd(0, 0) is undefined");
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int quot = old_r / r;  // truncated division, sign-safe
        Int tmp = old_r - quot * r;
        old_r = std::exchange(r, tmp);
        tmp = old_s - quot * s;
        old_s = std::exchange(s, tmp);
        tmp = old_t - quot * t;
        old_t = std::exchange(t, tmp);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Int mod_inverse(const Int& a, const Int& n) {
    if (n < 2) throw ValidationError("mod_inverse requires modulus n >= 2");
    Int a_red = a % n;
    if (a_red < 0) a_red += n;
    auto [g, x, y] = ext_gcd(a_red, n);
    if (g != 1)
        throw ValidationError("mod_inverse: gcd(" + a.str() + ", " + n.str() + ") != 1");
    Int inv = x % n;
    if (inv < 0) inv += n;
    return inv;
}

HJChain::HJChain(std::vector<Int> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw ValidationError("HJ chain must be nonempty (use HJChain::empty())");
    for (const Int& b : entries_)
        if (b < 2) throw ValidationError("HJ chain entry " + b.str() + " < 2");
}

const Int& HJChain::at(std::size_t pos1) const {
    if (pos1 < 1 || pos1 > entries_.size())
        throw ValidationError("chain position out of range");
    return entries_[pos1 - 1];
}

std::string HJChain::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += entries_[i].str();
    }
    return s + "]";
}

HJChain hj_expand(const Int& n, const Int& q) {
    if (n < 2) throw ValidationError("hj_expand requires n >= 2");
    if (q <= 0 || q >= n) throw ValidationError("hj_expand requires 0 < q < n");
    if (gcd(n, q) != 1) throw ValidationError("hj_expand requires gcd(n, q) = 1");
    std::vector<Int> entries;
    Int num = n, den = q;
    while (den != 0) {
        // b = ceil(num/den); both positive here.
        Int b = (num + den - 1) / den;
        entries.push_back(b);
        Int next = b * den - num;  // 0 <= next < den
        num = std::exchange(den, next);
    }
    return HJChain(std::move(entries));
}

std::pair<Int, Int> hj_evaluate(const HJChain& chain) {
    if (chain.is_empty()) throw ValidationError("cannot evaluate an empty HJ chain");
    // From the right: v_k = b_k, v_i = b_i - 1/v_{i+1}; the running value is
    // kept as the fraction num/den.
    Int num = 1, den = 0;
    const auto& e = chain.entries();
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        // new value = b - den/num = (b*num - den)/num
        Int nn = *it * num - den;
        den = std::exchange(num, nn);
    }
    return {num, den};
}

}  // namespace mmp
