#pragma once

// Builders for the series of the inversion identities and verifiers that
// check them degree by degree with exact arithmetic.

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqsym/element.hpp"
#include "fqsym/nsym.hpp"
#include "fqsym/series.hpp"

namespace fqsym {

struct ResidualTerm {
    std::string kind; // "perm", "comp" or "case"
    std::string key;
    Coeff coeff;

    bool operator==(const ResidualTerm&) const = default;
};

struct DegreeResidual {
    std::size_t degree = 0;
    std::size_t nonzero_terms = 0;
    std::vector<ResidualTerm> sample; // at most kMaxResidualSample entries

    bool operator==(const DegreeResidual&) const = default;
};

struct SubCheck {
    std::string name;
    bool ok = true;
    std::size_t failures = 0;

    bool operator==(const SubCheck&) const = default;
};

inline constexpr std::size_t kMaxResidualSample = 5;

struct VerificationReport {
    std::string identity;
    std::string parts;
    std::size_t max_degree = 0;
    std::vector<std::pair<std::string, std::string>> details;
    bool ok = true;
    std::vector<DegreeResidual> per_degree;
    std::vector<SubCheck> checks;
    std::chrono::milliseconds elapsed{0};
};

/// Perturbation of one coefficient on the candidate side of a check.
struct Corruption {
    std::size_t degree = 0;
    std::size_t term = 0; // index into the support, in key order
    Coeff delta = 1;
};

struct VerifyOptions {
    std::size_t enumeration_bound = kDefaultEnumerationBound;
    std::size_t general_degree_bound = 8;
    std::size_t odd_degree_bound = 9;
    std::optional<Corruption> corruption;
};

enum class UngSeries { H1, H2, H3 };

std::string to_string(UngSeries which);
UngSeries parse_ung_series(std::string_view text);
/// all, {2} and even respectively.
PartSet ung_part_set(UngSeries which);

/// sum over I in C(E) of (-1)^l(I) G_omega(I), G basis.
Series theorem_lhs(const PartSet& E, std::size_t order);
/// sum over K in C(E) of S^diam(K), S basis.
Series theorem_rhs(const PartSet& E, std::size_t order);

/// Ung's series, built in F as written and returned in G.
Series ung_series(UngSeries which, std::size_t order);
/// sum of G_hat(s) over the admissible permutations s, G basis.
Series ung_conjectured_inverse(UngSeries which, std::size_t order,
                               std::size_t bound = kDefaultEnumerationBound);

/// Adds corruption.delta to one term of s; throws if the term does not exist.
void apply_corruption(Series& s, const Corruption& corruption);
void apply_corruption(RibbonSeries& s, const Corruption& corruption);

VerificationReport verify_theorem(const PartSet& E, std::size_t order, const VerifyOptions& options = {});
VerificationReport verify_ung(UngSeries which, std::size_t order, const VerifyOptions& options = {});
VerificationReport verify_hook_bijection(std::size_t max_n, const VerifyOptions& options = {});
VerificationReport verify_qlit(std::size_t order, const VerifyOptions& options = {});
VerificationReport verify_ncschur(std::size_t order, const VerifyOptions& options = {});
VerificationReport verify_structure(std::size_t max_n, const VerifyOptions& options = {});
/// Realization oracle: product rules against concatenation of realized words.
VerificationReport verify_oracle(int alphabet_size, std::size_t max_degree, const VerifyOptions& options = {});

/// c_I for weight 2p+1: permutations of shape I whose inverse has shape (1,2^p).
std::map<Composition, Coeff> tangent_counts(std::size_t weight, std::size_t bound = kDefaultEnumerationBound);

} // namespace fqsym
