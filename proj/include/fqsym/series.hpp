#pragma once

// Graded series truncated at a fixed order, with Cauchy products and
// inversion. Generic over the homogeneous element type so that FQSym and
// NSym share one recurrence.

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fqsym/element.hpp"

namespace fqsym {

template <typename E>
concept GradedElement = requires(const E& a, const E& b, E& m, const Coeff& c, std::size_t d) {
    { product(a, b) } -> std::same_as<E>;
    { a.degree() } -> std::convertible_to<std::size_t>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.scalar() } -> std::convertible_to<Coeff>;
    { a.zero_of_degree(d) } -> std::same_as<E>;
    { m += b } -> std::same_as<E&>;
    { m *= c } -> std::same_as<E&>;
    { a == b } -> std::convertible_to<bool>;
};

template <GradedElement E>
class TruncatedSeries {
public:
    /// Parts for degrees 0..order; parts[d] must have degree d.
    TruncatedSeries(std::size_t order, std::vector<E> parts) : order_(order), parts_(std::move(parts)) {
        if (parts_.size() != order_ + 1)
            throw std::invalid_argument("series of order " + std::to_string(order_) + " needs " +
                                        std::to_string(order_ + 1) + " parts");
        for (std::size_t d = 0; d <= order_; ++d)
            if (parts_[d].degree() != d)
                throw std::invalid_argument("series part " + std::to_string(d) + " has wrong degree");
        if constexpr (requires(const E& x) { x.basis(); }) {
            for (const auto& part : parts_)
                if (part.basis() != parts_[0].basis())
                    throw BasisMismatch("series parts must share one basis");
        }
    }

    /// 1 + 0 + ... + 0, shaped like the given degree-0 prototype.
    static TruncatedSeries unit(std::size_t order, const E& prototype) {
        std::vector<E> parts;
        parts.reserve(order + 1);
        E one = prototype.zero_of_degree(0);
        one += unit_like(prototype);
        parts.push_back(std::move(one));
        for (std::size_t d = 1; d <= order; ++d)
            parts.push_back(prototype.zero_of_degree(d));
        return TruncatedSeries(order, std::move(parts));
    }

    std::size_t order() const noexcept { return order_; }
    const std::vector<E>& parts() const noexcept { return parts_; }
    const E& operator[](std::size_t d) const { return parts_.at(d); }
    E& mutable_part(std::size_t d) { return parts_.at(d); }

    bool operator==(const TruncatedSeries&) const = default;

private:
    static E unit_like(const E& prototype);

    std::size_t order_;
    std::vector<E> parts_;
};

template <GradedElement E>
E TruncatedSeries<E>::unit_like(const E& prototype) {
    if constexpr (requires { E::unit(); }) {
        (void)prototype;
        return E::unit();
    } else {
        return E::unit(prototype.basis());
    }
}

template <GradedElement E>
TruncatedSeries<E> unit_series_like(const TruncatedSeries<E>& s) {
    return TruncatedSeries<E>::unit(s.order(), s[0]);
}

/// Degree-d part is the sum over k of a_k * b_(d-k); degrees above the order are dropped.
template <GradedElement E>
TruncatedSeries<E> series_product(const TruncatedSeries<E>& a, const TruncatedSeries<E>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_product: truncation orders " + std::to_string(a.order()) + " and " +
                                    std::to_string(b.order()) + " differ");
    std::vector<E> parts;
    parts.reserve(a.order() + 1);
    for (std::size_t d = 0; d <= a.order(); ++d) {
        E sum = a[0].zero_of_degree(d);
        for (std::size_t k = 0; k <= d; ++k) {
            if (a[k].is_zero() || b[d - k].is_zero())
                continue;
            sum += product(a[k], b[d - k]);
        }
        parts.push_back(std::move(sum));
    }
    return TruncatedSeries<E>(a.order(), std::move(parts));
}

/// Two-sided inverse of a series whose constant term is +1 or -1:
/// Q_0 = c, Q_d = -c * sum_{k=1..d} A_k Q_(d-k) with c = A_0.
template <GradedElement E>
TruncatedSeries<E> series_inverse(const TruncatedSeries<E>& a) {
    const Coeff c = a[0].scalar();
    if (c != 1 && c != -1)
        throw std::domain_error("series_inverse: constant term " + c.str() + " is not a unit");
    std::vector<E> parts;
    parts.reserve(a.order() + 1);
    {
        E q0 = a[0];
        parts.push_back(std::move(q0)); // c^-1 == c for c = +-1
    }
    for (std::size_t d = 1; d <= a.order(); ++d) {
        E sum = a[0].zero_of_degree(d);
        for (std::size_t k = 1; k <= d; ++k) {
            if (a[k].is_zero() || parts[d - k].is_zero())
                continue;
            sum += product(a[k], parts[d - k]);
        }
        sum *= Coeff(-c);
        parts.push_back(std::move(sum));
    }
    return TruncatedSeries<E>(a.order(), std::move(parts));
}

template <GradedElement E>
TruncatedSeries<E> operator-(const TruncatedSeries<E>& a, const TruncatedSeries<E>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series difference: truncation orders differ");
    std::vector<E> parts;
    parts.reserve(a.order() + 1);
    for (std::size_t d = 0; d <= a.order(); ++d) {
        E x = a[d];
        E y = b[d];
        y *= Coeff(-1);
        x += y;
        parts.push_back(std::move(x));
    }
    return TruncatedSeries<E>(a.order(), std::move(parts));
}

/// Apply an element-wise map (e.g. a basis conversion) to every part.
template <GradedElement E, typename Fn>
auto map_series(const TruncatedSeries<E>& s, Fn&& fn) {
    using Out = std::decay_t<decltype(fn(s[0]))>;
    std::vector<Out> parts;
    parts.reserve(s.order() + 1);
    for (const auto& part : s.parts())
        parts.push_back(fn(part));
    return TruncatedSeries<Out>(s.order(), std::move(parts));
}

using Series = TruncatedSeries<HomogeneousElement>;

inline Series to_basis(const Series& s, Basis basis) {
    return map_series(s, [basis](const HomogeneousElement& x) { return to_basis(x, basis); });
}

} // namespace fqsym
