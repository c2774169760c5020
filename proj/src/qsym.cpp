#include "fqsym/qsym.hpp"

namespace fqsym {

Coeff QSymImage::coeff(const Composition& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void QSymImage::add_term(const Composition& I, const Coeff& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(I, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QSymImage& QSymImage::operator+=(const QSymImage& other) {
    for (const auto& [I, c] : other.terms_)
        add_term(I, c);
    return *this;
}

QSymImage& QSymImage::operator-=(const QSymImage& other) {
    for (const auto& [I, c] : other.terms_)
        add_term(I, -c);
    return *this;
}

QSymImage commutative_image(const HomogeneousElement& x) {
    QSymImage out;
    const auto f = to_F(x);
    for (const auto& [p, c] : f.terms())
        out.add_term(descent_composition(p), c);
    return out;
}

namespace {

/// Lift a graded image to FQSym, one homogeneous part per weight.
std::map<std::size_t, HomogeneousElement> lift(const QSymImage& x) {
    std::map<std::size_t, HomogeneousElement> out;
    for (const auto& [I, c] : x.terms()) {
        auto it = out.try_emplace(I.weight(), Basis::F, I.weight()).first;
        it->second.add_term(alpha(I), c);
    }
    return out;
}

} // namespace

QSymImage qsym_product(const QSymImage& a, const QSymImage& b) {
    QSymImage out;
    const auto la = lift(a);
    const auto lb = lift(b);
    for (const auto& [da, xa] : la)
        for (const auto& [db, xb] : lb)
            out += commutative_image(product(xa, xb));
    return out;
}

} // namespace fqsym
