#pragma once

// Commutative image of FQSym in the fundamental basis of quasi-symmetric
// functions, indexed by compositions.

#include <map>

#include "fqsym/element.hpp"

namespace fqsym {

class QSymImage {
public:
    using Terms = std::map<Composition, Coeff>;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Coeff coeff(const Composition& I) const;
    void add_term(const Composition& I, const Coeff& c);

    QSymImage& operator+=(const QSymImage& other);
    QSymImage& operator-=(const QSymImage& other);

    bool operator==(const QSymImage&) const = default;

private:
    Terms terms_;
};

/// F_s maps to the fundamental function indexed by C(s); other bases go through F.
QSymImage commutative_image(const HomogeneousElement& x);

/// Product of images, defined as the image of the FQSym product of canonical
/// preimages F_alpha(I). Only meaningful because the image is a morphism,
/// which the test suite checks.
QSymImage qsym_product(const QSymImage& a, const QSymImage& b);

} // namespace fqsym
