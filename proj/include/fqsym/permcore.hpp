#pragma once

// Permutation, word and composition combinatorics: standardization, descents,
// weak order, shifted shuffles, convolution and anticonnected factorization.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fqsym {

/// Degree cap for routines that enumerate whole descent classes or S_n.
inline constexpr std::size_t kDefaultEnumerationBound = 9;

class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A word over the totally ordered alphabet {1, 2, 3, ...}.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters);
    explicit Word(std::vector<int> letters);

    const std::vector<int>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }
    int max_letter() const noexcept;

    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
};

/// A permutation of {1..n} in one-line notation. n = 0 is the empty permutation.
class Permutation {
public:
    using value_type = std::uint8_t;

    Permutation() = default;
    Permutation(std::initializer_list<int> values);
    explicit Permutation(std::span<const int> values);

    static Permutation identity(std::size_t n);
    /// The reversal n, n-1, ..., 1.
    static Permutation longest(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    /// One-based value at zero-based position i.
    int operator[](std::size_t i) const { return values_[i]; }
    /// One-based evaluation p(i).
    int operator()(std::size_t i) const { return values_.at(i - 1); }
    std::span<const value_type> values() const noexcept { return values_; }

    Word as_word() const;
    std::size_t inversions() const noexcept;

    auto operator<=>(const Permutation&) const = default;

private:
    friend class PermutationBuilder;
    std::vector<value_type> values_;
};

/// Unchecked construction for hot loops. The caller guarantees a bijection.
class PermutationBuilder {
public:
    static Permutation from_raw(std::vector<Permutation::value_type> values) {
        Permutation p;
        p.values_ = std::move(values);
        return p;
    }
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        auto v = p.values();
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(v.data()), v.size()));
    }
};

/// A composition: a finite sequence of positive parts.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts);
    explicit Composition(std::vector<int> parts);

    /// The composition of n whose partial sums (except n itself) form the given set.
    static Composition from_descent_set(const std::set<std::size_t>& descents, std::size_t n);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    std::size_t weight() const noexcept { return weight_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::set<std::size_t> descent_set() const;

    auto operator<=>(const Composition& other) const { return parts_ <=> other.parts_; }
    bool operator==(const Composition& other) const { return parts_ == other.parts_; }

private:
    std::vector<int> parts_;
    std::size_t weight_ = 0;
};

/// Allowed part sizes E, a subset of the positive integers.
class PartSet {
public:
    enum class Kind { All, Even, Odd, Explicit };

    static PartSet all() { return PartSet(Kind::All, {}); }
    static PartSet even() { return PartSet(Kind::Even, {}); }
    static PartSet odd() { return PartSet(Kind::Odd, {}); }
    static PartSet of(std::set<int> parts);

    Kind kind() const noexcept { return kind_; }
    const std::set<int>& explicit_parts() const noexcept { return parts_; }
    bool contains(int part) const noexcept;
    /// "all", "even", "odd" or "set:a,b,c".
    std::string to_string() const;

    bool operator==(const PartSet&) const = default;

private:
    PartSet(Kind kind, std::set<int> parts) : kind_(kind), parts_(std::move(parts)) {}

    Kind kind_;
    std::set<int> parts_;
};

// Wire formats: "3,4,1,6,2,5" and "[2,2,2]".
std::string to_string(const Permutation& p);
std::string to_string(const Composition& c);
std::string to_string(const Word& w);
Permutation parse_permutation(std::string_view text);
Composition parse_composition(std::string_view text);

Permutation standardize(const Word& w);
Permutation inverse(const Permutation& p);
/// (s o t)(i) = s(t(i)).
Permutation compose(const Permutation& s, const Permutation& t);

std::set<std::size_t> descent_set(const Permutation& p);
Composition descent_composition(const Permutation& p);

/// Minimal-length element of the descent class of I.
Permutation alpha(const Composition& I);
/// Maximal-length element of the descent class of I.
Permutation omega(const Composition& I);
/// alpha(I) o omega(I)^-1.
Permutation diam(const Composition& I);
/// p o omega(C(p))^-1.
Permutation hat(const Permutation& p);

Word mirror(const Word& w);
Composition mirror(const Composition& c);
Permutation mirror(const Permutation& p);

/// J coarser than I, i.e. Des(J) is a subset of Des(I).
bool coarser(const Composition& J, const Composition& I);
/// Every J with coarser(J, I), lexicographically sorted.
std::vector<Composition> coarsenings(const Composition& I);

/// Inversion set by positions: pairs (i, j), i < j, p(i) > p(j), one-based.
std::set<std::pair<std::size_t, std::size_t>> inversion_set(const Permutation& p);
/// t <= s in the weak order, i.e. Inv(t) is contained in Inv(s).
bool weak_le(const Permutation& t, const Permutation& s);
/// {t : t <= s}, sorted.
std::vector<Permutation> weak_down_set(const Permutation& s);
/// {t : a <= t <= b}, sorted; empty when a is not below b.
std::vector<Permutation> weak_interval(const Permutation& a, const Permutation& b);

/// u . v[|u|]
Word shifted_concat(const Word& u, const Word& v);
Permutation shifted_concat(const Permutation& u, const Permutation& v);
/// u[|v|] . v
Word left_shifted_concat(const Word& u, const Word& v);
Permutation left_shifted_concat(const Permutation& u, const Permutation& v);

/// All interleavings of u with v[|u|], sorted.
std::vector<Word> shifted_shuffle(const Word& u, const Word& v);
std::vector<Permutation> shifted_shuffle(const Permutation& u, const Permutation& v);
/// Inverses of the elements of inverse(a) shifted-shuffled with inverse(b), sorted.
std::vector<Permutation> convolution(const Permutation& a, const Permutation& b);

namespace detail {

/// Calls fn(mask) for every n-bit mask with exactly k bits set.
template <typename Fn>
void for_each_subset_mask(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n || n > 63)
        throw std::invalid_argument("subset enumeration supports n <= 63");
    if (k == 0) {
        fn(std::uint64_t{0});
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
        fn(mask);
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = ripple | (((ripple ^ mask) >> 2) / low);
    }
}

} // namespace detail

/// Calls fn(gamma) for every gamma in u shifted-shuffled with v. Order unspecified.
template <typename Fn>
void for_each_shifted_shuffle(const Permutation& u, const Permutation& v, Fn&& fn) {
    const std::size_t k = u.size();
    const std::size_t n = k + v.size();
    std::vector<Permutation::value_type> out(n);
    detail::for_each_subset_mask(n, k, [&](std::uint64_t mask) {
        std::size_t iu = 0;
        std::size_t iv = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            if (mask >> pos & 1U)
                out[pos] = static_cast<Permutation::value_type>(u[iu++]);
            else
                out[pos] = static_cast<Permutation::value_type>(v[iv++] + k);
        }
        fn(PermutationBuilder::from_raw(out));
    });
}

/// Calls fn(gamma) for every gamma in the convolution a * b. Order unspecified.
/// gamma restricted to its first |a| positions standardizes to a, the rest to b.
template <typename Fn>
void for_each_convolution(const Permutation& a, const Permutation& b, Fn&& fn) {
    const std::size_t k = a.size();
    const std::size_t n = k + b.size();
    std::vector<Permutation::value_type> low(k);
    std::vector<Permutation::value_type> high(n - k);
    std::vector<Permutation::value_type> out(n);
    detail::for_each_subset_mask(n, k, [&](std::uint64_t mask) {
        std::size_t il = 0;
        std::size_t ih = 0;
        for (std::size_t value = 1; value <= n; ++value) {
            if (mask >> (value - 1) & 1U)
                low[il++] = static_cast<Permutation::value_type>(value);
            else
                high[ih++] = static_cast<Permutation::value_type>(value);
        }
        for (std::size_t i = 0; i < k; ++i)
            out[i] = low[a[i] - 1];
        for (std::size_t j = 0; j < n - k; ++j)
            out[k + j] = high[b[j] - 1];
        fn(PermutationBuilder::from_raw(out));
    });
}

/// Maximal factorization p = f1 > f2 > ... > fr under left-shifted concatenation.
std::vector<Permutation> anticonnected_factors(const Permutation& p);
bool is_anticonnected(const Permutation& p);

/// All compositions of n with parts in E, lexicographic.
std::vector<Composition> compositions_with_parts(const PartSet& E, std::size_t n);
std::vector<Composition> compositions(std::size_t n);

/// All permutations with descent composition I, sorted.
std::vector<Permutation> descent_class(const Composition& I,
                                       std::size_t bound = kDefaultEnumerationBound);
/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n,
                                          std::size_t bound = kDefaultEnumerationBound);

std::size_t binomial(std::size_t n, std::size_t k);

} // namespace fqsym
