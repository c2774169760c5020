#pragma once

// Realization of FQSym inside the free associative algebra over a finite
// alphabet {1..m}: G_s(A) is the sum of the words that standardize to s.
// Used as an independent oracle for the product rules.

#include <map>

#include "fqsym/element.hpp"

namespace fqsym {

/// Noncommutative polynomial with integer coefficients over the letters 1..m.
class NCPolynomial {
public:
    using Terms = std::map<Word, Coeff>;

    explicit NCPolynomial(int alphabet_size);
    /// The constant polynomial 1.
    static NCPolynomial one(int alphabet_size);

    int alphabet_size() const noexcept { return alphabet_size_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coeff coeff(const Word& w) const;
    void add_term(const Word& w, const Coeff& c);

    NCPolynomial& operator+=(const NCPolynomial& other);
    bool operator==(const NCPolynomial&) const = default;

private:
    int alphabet_size_;
    Terms terms_;
};

/// All words of the given length over 1..m, lexicographic.
std::vector<Word> words_of_length(std::size_t length, int alphabet_size);

/// Image of x (converted to G if needed) over the alphabet 1..m.
NCPolynomial realize(const HomogeneousElement& x, int alphabet_size);

/// Concatenation product.
NCPolynomial ncpoly_product(const NCPolynomial& p, const NCPolynomial& q);

} // namespace fqsym
