#include "fqsym/nsym.hpp"

namespace fqsym {

RibbonElement RibbonElement::ribbon(const Composition& I, const Coeff& c) {
    RibbonElement x(I.weight());
    x.add_term(I, c);
    return x;
}

Coeff RibbonElement::coeff(const Composition& I) const {
    auto it = terms_.find(I);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void RibbonElement::add_term(const Composition& I, const Coeff& c) {
    if (I.weight() != degree_)
        throw std::invalid_argument("ribbon " + to_string(I) + " added to element of degree " +
                                    std::to_string(degree_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(I, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

RibbonElement& RibbonElement::operator+=(const RibbonElement& other) {
    if (other.degree_ != degree_)
        throw std::invalid_argument("cannot add ribbon elements of different degrees");
    for (const auto& [I, c] : other.terms_)
        add_term(I, c);
    return *this;
}

RibbonElement& RibbonElement::operator-=(const RibbonElement& other) {
    if (other.degree_ != degree_)
        throw std::invalid_argument("cannot subtract ribbon elements of different degrees");
    for (const auto& [I, c] : other.terms_)
        add_term(I, -c);
    return *this;
}

RibbonElement& RibbonElement::operator*=(const Coeff& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [I, x] : terms_)
        x *= c;
    return *this;
}

RibbonElement product(const RibbonElement& a, const RibbonElement& b) {
    RibbonElement out(a.degree() + b.degree());
    for (const auto& [I, ci] : a.terms()) {
        for (const auto& [J, cj] : b.terms()) {
            const Coeff c = ci * cj;
            if (I.empty() || J.empty()) {
                out.add_term(I.empty() ? J : I, c);
                continue;
            }
            std::vector<int> concat(I.parts());
            concat.insert(concat.end(), J.parts().begin(), J.parts().end());
            out.add_term(Composition(concat), c);

            std::vector<int> merged(I.parts());
            merged.back() += J.parts().front();
            merged.insert(merged.end(), J.parts().begin() + 1, J.parts().end());
            out.add_term(Composition(std::move(merged)), c);
        }
    }
    return out;
}

HomogeneousElement embed(const RibbonElement& x, std::size_t bound) {
    HomogeneousElement out(Basis::F, x.degree());
    for (const auto& [I, c] : x.terms())
        for (const auto& s : descent_class(I, bound))
            out.add_term(inverse(s), c);
    return out;
}

Series embed(const RibbonSeries& s, std::size_t bound) {
    return map_series(s, [bound](const RibbonElement& x) { return embed(x, bound); });
}

Composition hook(std::size_t k, std::size_t n) {
    if (k >= n)
        throw std::invalid_argument("hook (1^k, n-k) needs k < n");
    std::vector<int> parts(k, 1);
    parts.push_back(static_cast<int>(n - k));
    return Composition(std::move(parts));
}

RibbonElement h_n(std::size_t n) {
    if (n == 0)
        return RibbonElement::unit();
    RibbonElement out(n);
    for (std::size_t k = 0; k < n; ++k)
        out.add_term(hook(k, n), 1);
    return out;
}

RibbonSeries h_series(std::size_t order) {
    std::vector<RibbonElement> parts;
    for (std::size_t n = 0; n <= order; ++n)
        parts.push_back(h_n(n));
    return RibbonSeries(order, std::move(parts));
}

RibbonSeries lambda1_sigma1(std::size_t order) {
    auto lambda = [](std::size_t k) {
        return k == 0 ? RibbonElement::unit() : RibbonElement::ribbon(Composition(std::vector<int>(k, 1)));
    };
    auto sigma = [](std::size_t j) {
        return j == 0 ? RibbonElement::unit() : RibbonElement::ribbon(Composition{static_cast<int>(j)});
    };
    std::vector<RibbonElement> parts;
    for (std::size_t n = 0; n <= order; ++n) {
        RibbonElement part(n);
        for (std::size_t k = 0; k <= n; ++k)
            part += product(lambda(k), sigma(n - k));
        parts.push_back(std::move(part));
    }
    return RibbonSeries(order, std::move(parts));
}

RibbonSeries tanh_inverse_series(std::size_t order) {
    std::vector<RibbonElement> parts;
    parts.push_back(RibbonElement::unit());
    for (std::size_t n = 1; n <= order; ++n) {
        RibbonElement part(n);
        if (n % 2 == 1) {
            const std::size_t p = (n - 1) / 2;
            std::vector<int> shape{1};
            shape.insert(shape.end(), p, 2);
            // -(-1)^p
            part.add_term(Composition(std::move(shape)), p % 2 == 0 ? -1 : 1);
        }
        parts.push_back(std::move(part));
    }
    return RibbonSeries(order, std::move(parts));
}

} // namespace fqsym
