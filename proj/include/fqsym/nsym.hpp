#pragma once

// Noncommutative symmetric functions in the ribbon basis, their embedding
// into FQSym, and the hook, Schur-sum and hyperbolic tangent series.

#include <map>

#include "fqsym/element.hpp"
#include "fqsym/series.hpp"

namespace fqsym {

/// Integer combination of ribbons R_I with every I of weight degree().
class RibbonElement {
public:
    using Key = Composition;
    using Terms = std::map<Composition, Coeff>;

    explicit RibbonElement(std::size_t degree) : degree_(degree) {}

    static RibbonElement ribbon(const Composition& I, const Coeff& c = 1);
    static RibbonElement unit() { return ribbon(Composition{}); }

    std::size_t degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coeff coeff(const Composition& I) const;
    Coeff scalar() const { return coeff(Composition{}); }
    void add_term(const Composition& I, const Coeff& c);

    RibbonElement zero_of_degree(std::size_t degree) const { return RibbonElement(degree); }

    RibbonElement& operator+=(const RibbonElement& other);
    RibbonElement& operator-=(const RibbonElement& other);
    RibbonElement& operator*=(const Coeff& c);

    friend RibbonElement operator+(RibbonElement a, const RibbonElement& b) { return a += b; }
    friend RibbonElement operator-(RibbonElement a, const RibbonElement& b) { return a -= b; }
    friend RibbonElement operator*(const Coeff& c, RibbonElement a) { return a *= c; }

    bool operator==(const RibbonElement&) const = default;

private:
    std::size_t degree_;
    Terms terms_;
};

/// R_I R_J = R_(I.J) + R_(I|>J), the second term merging the last part of I
/// with the first part of J. R_() is the unit.
RibbonElement product(const RibbonElement& a, const RibbonElement& b);
inline RibbonElement ribbon_product(const RibbonElement& a, const RibbonElement& b) { return product(a, b); }

using RibbonSeries = TruncatedSeries<RibbonElement>;

/// R_I maps to the sum of F_s over s with C(s^-1) = I.
HomogeneousElement embed(const RibbonElement& x, std::size_t bound = kDefaultEnumerationBound);
Series embed(const RibbonSeries& s, std::size_t bound = kDefaultEnumerationBound);

/// (1^k, n-k)
Composition hook(std::size_t k, std::size_t n);

/// H_n, the sum of the hook ribbons of weight n; H_0 is the unit.
RibbonElement h_n(std::size_t n);
/// 1 + H_1 + ... + H_N.
RibbonSeries h_series(std::size_t order);
/// Degree n part: sum over k of Lambda_k S_(n-k), Lambda_k = R_(1^k), S_j = R_(j).
RibbonSeries lambda1_sigma1(std::size_t order);
/// 1 - sum over p of (-1)^p R_(1,2^p), odd degrees only.
RibbonSeries tanh_inverse_series(std::size_t order);

} // namespace fqsym
