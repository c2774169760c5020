#pragma once

// Brute-force reference routes used only by the tests. Nothing here calls the
// library routine it is meant to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fqsym/element.hpp"
#include "fqsym/permcore.hpp"

namespace fqsym::brute {

using Perm = std::vector<int>;

inline std::vector<Perm> symmetric_group(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline Permutation to_perm(const Perm& p) { return Permutation(std::span<const int>(p)); }

inline Perm values(const Permutation& p) { return Perm(p.values().begin(), p.values().end()); }

inline std::set<std::pair<int, int>> inversions(const Perm& p) {
    std::set<std::pair<int, int>> out;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                out.emplace(static_cast<int>(i), static_cast<int>(j));
    return out;
}

inline bool subset(const std::set<std::pair<int, int>>& a, const std::set<std::pair<int, int>>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<int> descents(const Perm& p) {
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1])
            out.push_back(static_cast<int>(i + 1));
    return out;
}

/// Composition parts from descents, computed directly.
inline std::vector<int> shape(const Perm& p) {
    std::vector<int> parts;
    int run = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ++run;
        if (i + 1 == p.size() || p[i] > p[i + 1]) {
            parts.push_back(run);
            run = 0;
        }
    }
    return parts;
}

inline Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        q[p[i] - 1] = static_cast<int>(i + 1);
    return q;
}

/// (s o t)(i) = s(t(i)).
inline Perm compose(const Perm& s, const Perm& t) {
    Perm out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = s[t[i] - 1];
    return out;
}

/// Every permutation of S_n with the given shape, by filtering.
inline std::vector<Perm> descent_class(const std::vector<int>& parts) {
    const auto n = static_cast<std::size_t>(std::accumulate(parts.begin(), parts.end(), 0));
    std::vector<Perm> out;
    for (const auto& p : symmetric_group(n))
        if (shape(p) == parts)
            out.push_back(p);
    return out;
}

/// Element of the class with fewest (max = false) or most (max = true) inversions.
inline Perm extremal(const std::vector<int>& parts, bool max) {
    const auto cls = descent_class(parts);
    auto cmp = [](const Perm& a, const Perm& b) { return inversions(a).size() < inversions(b).size(); };
    return max ? *std::max_element(cls.begin(), cls.end(), cmp) : *std::min_element(cls.begin(), cls.end(), cmp);
}

/// The unique minimal-length sigma with w(sigma(1)) <= w(sigma(2)) <= ..., found by search.
inline Perm sorting_permutation(const std::vector<int>& w) {
    Perm best;
    std::size_t best_len = ~std::size_t{0};
    std::size_t ties = 0;
    for (const auto& s : symmetric_group(w.size())) {
        bool sorted = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (w[s[i] - 1] > w[s[i + 1] - 1])
                sorted = false;
        if (!sorted)
            continue;
        const auto len = inversions(s).size();
        if (len < best_len) {
            best_len = len;
            best = s;
            ties = 1;
        } else if (len == best_len) {
            ++ties;
        }
    }
    return ties == 1 ? best : Perm{};
}

/// Shuffle of u with v shifted by |u|, by enumerating position subsets recursively.
inline std::vector<Perm> shifted_shuffle(const Perm& u, const Perm& v) {
    Perm shifted = v;
    for (auto& x : shifted)
        x += static_cast<int>(u.size());
    std::vector<Perm> out;
    Perm cur;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == u.size() && j == shifted.size()) {
            out.push_back(cur);
            return;
        }
        if (i < u.size()) {
            cur.push_back(u[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < shifted.size()) {
            cur.push_back(shifted[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// All compositions of n as part vectors.
inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0)
        return {{}};
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 1; i < n; ++i) {
            if (mask >> (i - 1) & 1) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(parts);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Random element with small coefficients supported on random permutations.
inline HomogeneousElement random_element(Basis basis, std::size_t degree, std::mt19937& rng, std::size_t terms = 3) {
    HomogeneousElement x(basis, degree);
    auto perms = symmetric_group(degree);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (std::size_t i = 0; i < terms; ++i)
        x.add_term(to_perm(perms[pick(rng)]), coeff(rng));
    return x;
}

} // namespace fqsym::brute
