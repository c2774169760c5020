#include "fqsym/permcore.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace fqsym {

namespace {

int parse_int(std::string_view text) {
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.find_first_not_of(' ') == std::string_view::npos)
        return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

template <typename Seq>
std::string join(const Seq& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(static_cast<int>(seq[i]));
    }
    return out;
}

Permutation from_ints(const std::vector<int>& values) { return Permutation(std::span<const int>(values)); }

} // namespace

// ---------------------------------------------------------------------------
// Word

Word::Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
    for (int a : letters_)
        if (a < 1)
            throw std::invalid_argument("word letters must be >= 1");
}

int Word::max_letter() const noexcept {
    return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::span<const int>(values.begin(), values.size())) {}

Permutation::Permutation(std::span<const int> values) {
    const std::size_t n = values.size();
    if (n > 255)
        throw std::invalid_argument("permutation degree above 255 is not supported");
    std::vector<bool> seen(n + 1, false);
    values_.reserve(n);
    for (int v : values) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
        seen[v] = true;
        values_.push_back(static_cast<value_type>(v));
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<value_type> v(n);
    std::iota(v.begin(), v.end(), value_type{1});
    return PermutationBuilder::from_raw(std::move(v));
}

Permutation Permutation::longest(std::size_t n) {
    std::vector<value_type> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = static_cast<value_type>(n - i);
    return PermutationBuilder::from_raw(std::move(v));
}

Word Permutation::as_word() const { return Word(std::vector<int>(values_.begin(), values_.end())); }

std::size_t Permutation::inversions() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        for (std::size_t j = i + 1; j < values_.size(); ++j)
            count += values_[i] > values_[j];
    return count;
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1)
            throw std::invalid_argument("composition parts must be positive");
        weight_ += static_cast<std::size_t>(p);
    }
}

Composition Composition::from_descent_set(const std::set<std::size_t>& descents, std::size_t n) {
    std::vector<int> parts;
    std::size_t previous = 0;
    for (std::size_t d : descents) {
        if (d == 0 || d >= n)
            throw std::invalid_argument("descent position out of range");
        parts.push_back(static_cast<int>(d - previous));
        previous = d;
    }
    if (n > 0)
        parts.push_back(static_cast<int>(n - previous));
    return Composition(std::move(parts));
}

std::set<std::size_t> Composition::descent_set() const {
    std::set<std::size_t> out;
    std::size_t sum = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        sum += static_cast<std::size_t>(parts_[i]);
        out.insert(sum);
    }
    return out;
}

// ---------------------------------------------------------------------------
// PartSet

PartSet PartSet::of(std::set<int> parts) {
    if (parts.empty())
        throw std::invalid_argument("explicit part set must be nonempty");
    if (*parts.begin() < 1)
        throw std::invalid_argument("parts must be positive integers");
    return PartSet(Kind::Explicit, std::move(parts));
}

bool PartSet::contains(int part) const noexcept {
    if (part < 1)
        return false;
    switch (kind_) {
    case Kind::All: return true;
    case Kind::Even: return part % 2 == 0;
    case Kind::Odd: return part % 2 == 1;
    case Kind::Explicit: return parts_.count(part) > 0;
    }
    return false;
}

std::string PartSet::to_string() const {
    switch (kind_) {
    case Kind::All: return "all";
    case Kind::Even: return "even";
    case Kind::Odd: return "odd";
    case Kind::Explicit: {
        std::vector<int> v(parts_.begin(), parts_.end());
        return "set:" + join(v);
    }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Serialization

std::string to_string(const Permutation& p) { return join(p.values()); }
std::string to_string(const Composition& c) { return "[" + join(c.parts()) + "]"; }
std::string to_string(const Word& w) { return join(w.letters()); }

Permutation parse_permutation(std::string_view text) { return from_ints(parse_int_list(text)); }

Composition parse_composition(std::string_view text) {
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("composition must be bracketed: '" + std::string(text) + "'");
    return Composition(parse_int_list(text.substr(1, text.size() - 2)));
}

// ---------------------------------------------------------------------------
// Basic permutation algebra

Permutation standardize(const Word& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Equal letters keep their left-to-right order.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    std::vector<Permutation::value_type> out(n);
    for (std::size_t rank = 0; rank < n; ++rank)
        out[order[rank]] = static_cast<Permutation::value_type>(rank + 1);
    return PermutationBuilder::from_raw(std::move(out));
}

Permutation inverse(const Permutation& p) {
    std::vector<Permutation::value_type> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[p[i] - 1] = static_cast<Permutation::value_type>(i + 1);
    return PermutationBuilder::from_raw(std::move(out));
}

Permutation compose(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<Permutation::value_type> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = static_cast<Permutation::value_type>(s[t[i] - 1]);
    return PermutationBuilder::from_raw(std::move(out));
}

std::set<std::size_t> descent_set(const Permutation& p) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1])
            out.insert(i + 1);
    return out;
}

Composition descent_composition(const Permutation& p) {
    return Composition::from_descent_set(descent_set(p), p.size());
}

// ---------------------------------------------------------------------------
// Descent classes

Permutation alpha(const Composition& I) {
    // Longest element of the parabolic subgroup generated by the descents:
    // every maximal run of consecutive descent positions reverses its segment.
    const std::size_t n = I.weight();
    std::vector<Permutation::value_type> v(n);
    std::iota(v.begin(), v.end(), Permutation::value_type{1});
    const auto descents = I.descent_set();
    auto it = descents.begin();
    while (it != descents.end()) {
        const std::size_t start = *it;
        std::size_t end = start;
        for (++it; it != descents.end() && *it == end + 1; ++it)
            end = *it;
        std::reverse(v.begin() + static_cast<std::ptrdiff_t>(start - 1),
                     v.begin() + static_cast<std::ptrdiff_t>(end + 1));
    }
    return PermutationBuilder::from_raw(std::move(v));
}

Permutation omega(const Composition& I) {
    // Blocks receive the largest remaining values, each block increasing.
    std::vector<Permutation::value_type> v;
    v.reserve(I.weight());
    std::size_t top = I.weight();
    for (int part : I.parts()) {
        const std::size_t lo = top - static_cast<std::size_t>(part) + 1;
        for (std::size_t x = lo; x <= top; ++x)
            v.push_back(static_cast<Permutation::value_type>(x));
        top = lo - 1;
    }
    return PermutationBuilder::from_raw(std::move(v));
}

Permutation diam(const Composition& I) { return compose(alpha(I), inverse(omega(I))); }

Permutation hat(const Permutation& p) { return compose(p, inverse(omega(descent_composition(p)))); }

Word mirror(const Word& w) {
    std::vector<int> v(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(v));
}

Composition mirror(const Composition& c) {
    std::vector<int> v(c.parts().rbegin(), c.parts().rend());
    return Composition(std::move(v));
}

Permutation mirror(const Permutation& p) {
    std::vector<Permutation::value_type> v(p.values().rbegin(), p.values().rend());
    return PermutationBuilder::from_raw(std::move(v));
}

bool coarser(const Composition& J, const Composition& I) {
    if (J.weight() != I.weight())
        throw std::invalid_argument("coarser: weight mismatch");
    const auto dj = J.descent_set();
    const auto di = I.descent_set();
    return std::includes(di.begin(), di.end(), dj.begin(), dj.end());
}

std::vector<Composition> coarsenings(const Composition& I) {
    const auto descents = I.descent_set();
    const std::vector<std::size_t> d(descents.begin(), descents.end());
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << d.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
        std::set<std::size_t> subset;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (mask >> i & 1U)
                subset.insert(d[i]);
        out.push_back(Composition::from_descent_set(subset, I.weight()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Weak order

std::set<std::pair<std::size_t, std::size_t>> inversion_set(const Permutation& p) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                out.emplace(i + 1, j + 1);
    return out;
}

bool weak_le(const Permutation& t, const Permutation& s) {
    if (t.size() != s.size())
        throw std::invalid_argument("weak_le: degree mismatch");
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (t[i] > t[j] && s[i] < s[j])
                return false;
    return true;
}

std::vector<Permutation> weak_down_set(const Permutation& s) {
    // Downward covers swap the values v and v+1 when v+1 sits left of v; this
    // removes exactly one position inversion and leaves all others intact.
    std::unordered_set<Permutation, PermutationHash> seen{s};
    std::deque<Permutation> queue{s};
    const std::size_t n = s.size();
    std::vector<std::size_t> position(n + 1);
    while (!queue.empty()) {
        const Permutation current = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i)
            position[current[i]] = i;
        for (std::size_t v = 1; v < n; ++v) {
            if (position[v + 1] < position[v]) {
                std::vector<Permutation::value_type> next(current.values().begin(), current.values().end());
                std::swap(next[position[v]], next[position[v + 1]]);
                auto p = PermutationBuilder::from_raw(std::move(next));
                if (seen.insert(p).second)
                    queue.push_back(std::move(p));
            }
        }
    }
    std::vector<Permutation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> weak_interval(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("weak_interval: degree mismatch");
    if (!weak_le(a, b))
        return {};
    std::vector<Permutation> out;
    for (auto& t : weak_down_set(b))
        if (weak_le(a, t))
            out.push_back(std::move(t));
    return out;
}

// ---------------------------------------------------------------------------
// Concatenations and shuffles

Word shifted_concat(const Word& u, const Word& v) {
    std::vector<int> out(u.letters());
    const int shift = static_cast<int>(u.size());
    for (int a : v.letters())
        out.push_back(a + shift);
    return Word(std::move(out));
}

Permutation shifted_concat(const Permutation& u, const Permutation& v) {
    std::vector<Permutation::value_type> out(u.values().begin(), u.values().end());
    for (auto a : v.values())
        out.push_back(static_cast<Permutation::value_type>(a + u.size()));
    return PermutationBuilder::from_raw(std::move(out));
}

Word left_shifted_concat(const Word& u, const Word& v) {
    std::vector<int> out;
    const int shift = static_cast<int>(v.size());
    for (int a : u.letters())
        out.push_back(a + shift);
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    return Word(std::move(out));
}

Permutation left_shifted_concat(const Permutation& u, const Permutation& v) {
    std::vector<Permutation::value_type> out;
    out.reserve(u.size() + v.size());
    for (auto a : u.values())
        out.push_back(static_cast<Permutation::value_type>(a + v.size()));
    out.insert(out.end(), v.values().begin(), v.values().end());
    return PermutationBuilder::from_raw(std::move(out));
}

std::vector<Word> shifted_shuffle(const Word& u, const Word& v) {
    const std::size_t k = u.size();
    const std::size_t n = k + v.size();
    std::vector<Word> out;
    out.reserve(binomial(n, k));
    std::vector<int> w(n);
    detail::for_each_subset_mask(n, k, [&](std::uint64_t mask) {
        std::size_t iu = 0;
        std::size_t iv = 0;
        for (std::size_t pos = 0; pos < n; ++pos)
            w[pos] = (mask >> pos & 1U) ? u[iu++] : v[iv++] + static_cast<int>(k);
        out.emplace_back(w);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> shifted_shuffle(const Permutation& u, const Permutation& v) {
    std::vector<Permutation> out;
    out.reserve(binomial(u.size() + v.size(), u.size()));
    for_each_shifted_shuffle(u, v, [&](const Permutation& p) { out.push_back(p); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> convolution(const Permutation& a, const Permutation& b) {
    auto out = shifted_shuffle(inverse(a), inverse(b));
    for (auto& p : out)
        p = inverse(p);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Anticonnected factorization

std::vector<Permutation> anticonnected_factors(const Permutation& p) {
    // Split after position i when p(1..i) are exactly the top i values, i.e.
    // the prefix minimum equals n - i + 1.
    const std::size_t n = p.size();
    std::vector<Permutation> factors;
    std::size_t start = 0;
    int prefix_min = static_cast<int>(n) + 1;
    for (std::size_t i = 0; i < n; ++i) {
        prefix_min = std::min(prefix_min, p[i]);
        if (prefix_min == static_cast<int>(n - i)) {
            std::vector<int> block(p.values().begin() + static_cast<std::ptrdiff_t>(start),
                                   p.values().begin() + static_cast<std::ptrdiff_t>(i + 1));
            factors.push_back(standardize(Word(std::move(block))));
            start = i + 1;
        }
    }
    return factors;
}

bool is_anticonnected(const Permutation& p) { return anticonnected_factors(p).size() == 1; }

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Composition> compositions_with_parts(const PartSet& E, std::size_t n) {
    std::vector<Composition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t part = 1; part <= remaining; ++part) {
            if (!E.contains(static_cast<int>(part)))
                continue;
            current.push_back(static_cast<int>(part));
            self(self, remaining - part);
            current.pop_back();
        }
    };
    recurse(recurse, n);
    return out;
}

std::vector<Composition> compositions(std::size_t n) { return compositions_with_parts(PartSet::all(), n); }

std::vector<Permutation> descent_class(const Composition& I, std::size_t bound) {
    const std::size_t n = I.weight();
    if (n > bound)
        throw BoundExceeded("descent_class: weight " + std::to_string(n) + " exceeds enumeration bound " +
                            std::to_string(bound));
    // Fill the blocks left to right with increasing runs drawn from the unused
    // values, requiring a strict descent across each block boundary.
    std::vector<Permutation> out;
    std::vector<Permutation::value_type> current;
    current.reserve(n);
    std::vector<bool> used(n + 1, false);
    const auto& parts = I.parts();

    auto fill_block = [&](auto&& self, std::size_t block, std::size_t filled, int last) -> void {
        if (block == parts.size()) {
            out.push_back(PermutationBuilder::from_raw(current));
            return;
        }
        const auto size = static_cast<std::size_t>(parts[block]);
        if (filled == size) {
            self(self, block + 1, 0, current.empty() ? 0 : current.back());
            return;
        }
        // First letter of a block after the first must go below the previous block's last letter.
        const int lo = filled == 0 ? 1 : last + 1;
        const int hi = (filled == 0 && block > 0) ? last - 1 : static_cast<int>(n);
        for (int x = lo; x <= hi; ++x) {
            if (used[x])
                continue;
            used[x] = true;
            current.push_back(static_cast<Permutation::value_type>(x));
            self(self, block, filled + 1, x);
            current.pop_back();
            used[x] = false;
        }
    };
    fill_block(fill_block, 0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> all_permutations(std::size_t n, std::size_t bound) {
    if (n > bound)
        throw BoundExceeded("all_permutations: degree " + std::to_string(n) + " exceeds enumeration bound " +
                            std::to_string(bound));
    std::vector<Permutation> out;
    auto v = Permutation::identity(n);
    std::vector<Permutation::value_type> raw(v.values().begin(), v.values().end());
    do {
        out.push_back(PermutationBuilder::from_raw(raw));
    } while (std::next_permutation(raw.begin(), raw.end()));
    return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

} // namespace fqsym
