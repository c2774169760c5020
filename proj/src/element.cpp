#include "fqsym/element.hpp"

#include <algorithm>

namespace fqsym {

std::string to_string(Basis basis) {
    switch (basis) {
    case Basis::F: return "F";
    case Basis::G: return "G";
    case Basis::S: return "S";
    }
    return "?";
}

Basis parse_basis(std::string_view text) {
    if (text == "F")
        return Basis::F;
    if (text == "G")
        return Basis::G;
    if (text == "S")
        return Basis::S;
    throw std::invalid_argument("unknown basis '" + std::string(text) + "' (expected F, G or S)");
}

HomogeneousElement HomogeneousElement::basis_element(Basis basis, const Permutation& p, const Coeff& c) {
    HomogeneousElement x(basis, p.size());
    x.add_term(p, c);
    return x;
}

Coeff HomogeneousElement::coeff(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void HomogeneousElement::add_term(const Permutation& p, const Coeff& c) {
    if (p.size() != degree_)
        throw std::invalid_argument("term of degree " + std::to_string(p.size()) + " added to element of degree " +
                                    std::to_string(degree_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void HomogeneousElement::require_compatible(const HomogeneousElement& other) const {
    if (basis_ != other.basis_)
        throw BasisMismatch("cannot add elements of bases " + to_string(basis_) + " and " + to_string(other.basis_));
    if (degree_ != other.degree_)
        throw std::invalid_argument("cannot add elements of degrees " + std::to_string(degree_) + " and " +
                                    std::to_string(other.degree_));
}

HomogeneousElement& HomogeneousElement::operator+=(const HomogeneousElement& other) {
    require_compatible(other);
    for (const auto& [p, c] : other.terms_)
        add_term(p, c);
    return *this;
}

HomogeneousElement& HomogeneousElement::operator-=(const HomogeneousElement& other) {
    require_compatible(other);
    for (const auto& [p, c] : other.terms_)
        add_term(p, -c);
    return *this;
}

HomogeneousElement& HomogeneousElement::operator*=(const Coeff& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, x] : terms_)
        x *= c;
    return *this;
}

HomogeneousElement TermAccumulator::finish() && {
    HomogeneousElement out(basis_, degree_);
    std::vector<std::pair<Permutation, Coeff>> sorted;
    sorted.reserve(terms_.size());
    for (auto& [p, c] : terms_)
        if (c != 0)
            sorted.emplace_back(p, std::move(c));
    terms_.clear();
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [p, c] : sorted)
        out.add_term(p, c);
    return out;
}

HomogeneousElement product(const HomogeneousElement& a, const HomogeneousElement& b) {
    if (a.basis() != b.basis())
        throw BasisMismatch("product of elements in bases " + to_string(a.basis()) + " and " +
                            to_string(b.basis()) + "; convert first");
    TermAccumulator acc(a.basis(), a.degree() + b.degree());
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            const Coeff c = ca * cb;
            switch (a.basis()) {
            case Basis::F:
                for_each_shifted_shuffle(pa, pb, [&](const Permutation& g) { acc.add(g, c); });
                break;
            case Basis::G:
                for_each_convolution(pa, pb, [&](const Permutation& g) { acc.add(g, c); });
                break;
            case Basis::S:
                acc.add(left_shifted_concat(pa, pb), c);
                break;
            }
        }
    }
    return std::move(acc).finish();
}

namespace {

HomogeneousElement relabel_by_inverse(const HomogeneousElement& x, Basis target) {
    TermAccumulator acc(target, x.degree());
    for (const auto& [p, c] : x.terms())
        acc.add(inverse(p), c);
    return std::move(acc).finish();
}

HomogeneousElement s_to_g(const HomogeneousElement& x) {
    TermAccumulator acc(Basis::G, x.degree());
    for (const auto& [p, c] : x.terms())
        for (const auto& t : weak_down_set(p))
            acc.add(t, c);
    return std::move(acc).finish();
}

// G_s = sum over I coarser than C(s^-1) of (-1)^(l(I)-1) S^(alpha(I) s).
HomogeneousElement g_to_s(const HomogeneousElement& x) {
    TermAccumulator acc(Basis::S, x.degree());
    std::map<Composition, std::vector<std::pair<Permutation, int>>> cache;
    for (const auto& [p, c] : x.terms()) {
        const Composition shape = descent_composition(inverse(p));
        auto it = cache.find(shape);
        if (it == cache.end()) {
            std::vector<std::pair<Permutation, int>> entries;
            for (const auto& I : coarsenings(shape))
                entries.emplace_back(alpha(I), I.length() % 2 == 1 || I.length() == 0 ? 1 : -1);
            it = cache.emplace(shape, std::move(entries)).first;
        }
        for (const auto& [a, sign] : it->second)
            acc.add(compose(a, p), sign > 0 ? c : Coeff(-c));
    }
    return std::move(acc).finish();
}

} // namespace

HomogeneousElement to_G(const HomogeneousElement& x) {
    switch (x.basis()) {
    case Basis::G: return x;
    case Basis::F: return relabel_by_inverse(x, Basis::G);
    case Basis::S: return s_to_g(x);
    }
    return x;
}

HomogeneousElement to_F(const HomogeneousElement& x) {
    if (x.basis() == Basis::F)
        return x;
    return relabel_by_inverse(to_G(x), Basis::F);
}

HomogeneousElement to_S(const HomogeneousElement& x) {
    if (x.basis() == Basis::S)
        return x;
    return g_to_s(to_G(x));
}

HomogeneousElement to_basis(const HomogeneousElement& x, Basis basis) {
    switch (basis) {
    case Basis::F: return to_F(x);
    case Basis::G: return to_G(x);
    case Basis::S: return to_S(x);
    }
    return x;
}

Coeff pairing(const HomogeneousElement& a, const HomogeneousElement& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("pairing: degree mismatch");
    const auto fa = to_F(a);
    const auto gb = to_G(b);
    Coeff total = 0;
    for (const auto& [p, c] : fa.terms())
        total += c * gb.coeff(p);
    return total;
}

} // namespace fqsym
