#include "fqsym/realization.hpp"

namespace fqsym {

NCPolynomial::NCPolynomial(int alphabet_size) : alphabet_size_(alphabet_size) {
    if (alphabet_size < 1)
        throw std::invalid_argument("alphabet size must be at least 1");
}

NCPolynomial NCPolynomial::one(int alphabet_size) {
    NCPolynomial p(alphabet_size);
    p.add_term(Word{}, 1);
    return p;
}

Coeff NCPolynomial::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
}

void NCPolynomial::add_term(const Word& w, const Coeff& c) {
    if (w.max_letter() > alphabet_size_)
        throw std::invalid_argument("letter outside the alphabet 1.." + std::to_string(alphabet_size_));
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& other) {
    if (other.alphabet_size_ != alphabet_size_)
        throw std::invalid_argument("alphabet size mismatch");
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

std::vector<Word> words_of_length(std::size_t length, int alphabet_size) {
    std::vector<Word> out;
    std::vector<int> letters(length, 1);
    while (true) {
        out.emplace_back(letters);
        std::size_t i = length;
        while (i > 0 && letters[i - 1] == alphabet_size)
            letters[--i] = 1;
        if (i == 0)
            break;
        ++letters[i - 1];
    }
    return out;
}

NCPolynomial realize(const HomogeneousElement& x, int alphabet_size) {
    NCPolynomial out(alphabet_size);
    const auto g = to_G(x);
    if (g.is_zero())
        return out;
    for (const auto& w : words_of_length(g.degree(), alphabet_size)) {
        const Coeff c = g.coeff(standardize(w));
        if (c != 0)
            out.add_term(w, c);
    }
    return out;
}

NCPolynomial ncpoly_product(const NCPolynomial& p, const NCPolynomial& q) {
    if (p.alphabet_size() != q.alphabet_size())
        throw std::invalid_argument("ncpoly_product: alphabet size mismatch");
    NCPolynomial out(p.alphabet_size());
    for (const auto& [u, cu] : p.terms()) {
        for (const auto& [v, cv] : q.terms()) {
            std::vector<int> letters(u.letters());
            letters.insert(letters.end(), v.letters().begin(), v.letters().end());
            out.add_term(Word(std::move(letters)), cu * cv);
        }
    }
    return out;
}

} // namespace fqsym
