#pragma once

// Homogeneous elements of FQSym in the F, G and S bases.

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "fqsym/permcore.hpp"

namespace fqsym {

using Coeff = boost::multiprecision::cpp_int;

enum class Basis { F, G, S };

std::string to_string(Basis basis);
Basis parse_basis(std::string_view text);

class BasisMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite integer combination of basis elements indexed by permutations of
/// one fixed degree. Zero coefficients are never stored.
class HomogeneousElement {
public:
    using Key = Permutation;
    using Terms = std::map<Permutation, Coeff>;

    HomogeneousElement(Basis basis, std::size_t degree) : basis_(basis), degree_(degree) {}

    static HomogeneousElement basis_element(Basis basis, const Permutation& p, const Coeff& c = 1);
    static HomogeneousElement unit(Basis basis) { return basis_element(basis, Permutation{}); }

    Basis basis() const noexcept { return basis_; }
    std::size_t degree() const noexcept { return degree_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Coeff coeff(const Permutation& p) const;
    /// Coefficient of the empty permutation; zero unless degree() == 0.
    Coeff scalar() const { return coeff(Permutation{}); }

    void add_term(const Permutation& p, const Coeff& c);

    HomogeneousElement zero_of_degree(std::size_t degree) const { return {basis_, degree}; }

    HomogeneousElement& operator+=(const HomogeneousElement& other);
    HomogeneousElement& operator-=(const HomogeneousElement& other);
    HomogeneousElement& operator*=(const Coeff& c);

    friend HomogeneousElement operator+(HomogeneousElement a, const HomogeneousElement& b) { return a += b; }
    friend HomogeneousElement operator-(HomogeneousElement a, const HomogeneousElement& b) { return a -= b; }
    friend HomogeneousElement operator-(HomogeneousElement a) { return a *= Coeff(-1); }
    friend HomogeneousElement operator*(const Coeff& c, HomogeneousElement a) { return a *= c; }

    bool operator==(const HomogeneousElement& other) const = default;

private:
    void require_compatible(const HomogeneousElement& other) const;

    Basis basis_;
    std::size_t degree_;
    Terms terms_;
};

/// Hash-map accumulator used by the product and conversion kernels.
class TermAccumulator {
public:
    TermAccumulator(Basis basis, std::size_t degree) : basis_(basis), degree_(degree) {}

    void add(const Permutation& p, const Coeff& c) {
        auto [it, inserted] = terms_.try_emplace(p, c);
        if (!inserted)
            it->second += c;
    }
    void add(Permutation&& p, const Coeff& c) {
        auto [it, inserted] = terms_.try_emplace(std::move(p), c);
        if (!inserted)
            it->second += c;
    }
    HomogeneousElement finish() &&;

private:
    Basis basis_;
    std::size_t degree_;
    std::unordered_map<Permutation, Coeff, PermutationHash> terms_;
};

/// Product of two elements of the same basis.
///   F: F_a F_b = sum over the shifted shuffle of a and b.
///   G: G_a G_b = sum over the convolution of a and b.
///   S: S^a S^b = S^(a > b) (left-shifted concatenation).
HomogeneousElement product(const HomogeneousElement& a, const HomogeneousElement& b);

HomogeneousElement to_F(const HomogeneousElement& x);
HomogeneousElement to_G(const HomogeneousElement& x);
HomogeneousElement to_S(const HomogeneousElement& x);
HomogeneousElement to_basis(const HomogeneousElement& x, Basis basis);

/// <a, b> with a read in F and b in G, so that <F_s, G_t> = [s == t].
Coeff pairing(const HomogeneousElement& a, const HomogeneousElement& b);

} // namespace fqsym
