#include "fqsym/identities.hpp"

#include <algorithm>
#include <map>

#include "fqsym/qsym.hpp"
#include "fqsym/realization.hpp"

namespace fqsym {

namespace {

using Clock = std::chrono::steady_clock;

void require_degree(std::string_view what, std::size_t degree, std::size_t bound) {
    if (degree > bound)
        throw BoundExceeded(std::string(what) + ": degree " + std::to_string(degree) + " exceeds bound " +
                            std::to_string(bound));
}

class ReportBuilder {
public:
    ReportBuilder(std::string identity, std::string parts, std::size_t max_degree, std::size_t first_degree = 0)
        : start_(Clock::now()) {
        report_.identity = std::move(identity);
        report_.parts = std::move(parts);
        report_.max_degree = max_degree;
        for (std::size_t d = first_degree; d <= max_degree; ++d)
            report_.per_degree.push_back(DegreeResidual{d, 0, {}});
    }

    void detail(std::string key, std::string value) { report_.details.emplace_back(std::move(key), std::move(value)); }

    void residual(std::string_view check, std::size_t degree, ResidualTerm term) {
        auto& slot = slot_for(degree);
        ++slot.nonzero_terms;
        if (slot.sample.size() < kMaxResidualSample)
            slot.sample.push_back(std::move(term));
        ++check_entry(check).failures;
    }

    /// Records every nonzero term of a difference that should vanish.
    void residual(std::string_view check, const HomogeneousElement& diff) {
        check_entry(check);
        for (const auto& [p, c] : diff.terms())
            residual(check, diff.degree(), ResidualTerm{"perm", to_string(p), c});
    }
    void residual(std::string_view check, const RibbonElement& diff) {
        check_entry(check);
        for (const auto& [I, c] : diff.terms())
            residual(check, diff.degree(), ResidualTerm{"comp", to_string(I), c});
    }
    template <typename E>
    void residual(std::string_view check, const TruncatedSeries<E>& diff) {
        for (const auto& part : diff.parts())
            residual(check, part);
    }
    void residual(std::string_view check, std::size_t degree, const QSymImage& diff) {
        check_entry(check);
        for (const auto& [I, c] : diff.terms())
            residual(check, degree, ResidualTerm{"comp", to_string(I), c});
    }
    void failure(std::string_view check, std::size_t degree, std::string key) {
        residual(check, degree, ResidualTerm{"case", std::move(key), 1});
    }

    SubCheck& check_entry(std::string_view name) {
        for (auto& c : report_.checks)
            if (c.name == name)
                return c;
        return report_.checks.emplace_back(SubCheck{std::string(name), true, 0});
    }

    VerificationReport finish() && {
        report_.ok = true;
        for (const auto& d : report_.per_degree)
            if (d.nonzero_terms != 0)
                report_.ok = false;
        for (auto& c : report_.checks)
            c.ok = c.failures == 0;
        report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
        return std::move(report_);
    }

private:
    DegreeResidual& slot_for(std::size_t degree) {
        for (auto& d : report_.per_degree)
            if (d.degree == degree)
                return d;
        throw std::logic_error("residual recorded for degree outside the report range");
    }

    VerificationReport report_;
    Clock::time_point start_;
};

template <typename Terms>
auto& nth_term(Terms& terms, const Corruption& corruption) {
    if (corruption.term >= terms.size())
        throw std::out_of_range("corruption: degree " + std::to_string(corruption.degree) + " has only " +
                                std::to_string(terms.size()) + " terms");
    return *std::next(terms.begin(), static_cast<std::ptrdiff_t>(corruption.term));
}

bool is_hook(const Composition& I) {
    const auto& parts = I.parts();
    return !parts.empty() && std::all_of(parts.begin(), parts.end() - 1, [](int p) { return p == 1; });
}

Composition tangent_shape(std::size_t p) {
    std::vector<int> parts{1};
    parts.insert(parts.end(), p, 2);
    return Composition(std::move(parts));
}

} // namespace

std::string to_string(UngSeries which) {
    switch (which) {
    case UngSeries::H1: return "h1";
    case UngSeries::H2: return "h2";
    case UngSeries::H3: return "h3";
    }
    return "?";
}

UngSeries parse_ung_series(std::string_view text) {
    if (text == "h1")
        return UngSeries::H1;
    if (text == "h2")
        return UngSeries::H2;
    if (text == "h3")
        return UngSeries::H3;
    throw std::invalid_argument("unknown series '" + std::string(text) + "' (expected h1, h2 or h3)");
}

PartSet ung_part_set(UngSeries which) {
    switch (which) {
    case UngSeries::H1: return PartSet::all();
    case UngSeries::H2: return PartSet::of({2});
    case UngSeries::H3: return PartSet::even();
    }
    return PartSet::all();
}

Series theorem_lhs(const PartSet& E, std::size_t order) {
    std::vector<HomogeneousElement> parts;
    for (std::size_t n = 0; n <= order; ++n) {
        HomogeneousElement part(Basis::G, n);
        for (const auto& I : compositions_with_parts(E, n))
            part.add_term(omega(I), I.length() % 2 == 0 ? 1 : -1);
        parts.push_back(std::move(part));
    }
    return Series(order, std::move(parts));
}

Series theorem_rhs(const PartSet& E, std::size_t order) {
    std::vector<HomogeneousElement> parts;
    for (std::size_t n = 0; n <= order; ++n) {
        HomogeneousElement part(Basis::S, n);
        for (const auto& K : compositions_with_parts(E, n))
            part.add_term(diam(K), 1);
        parts.push_back(std::move(part));
    }
    return Series(order, std::move(parts));
}

Series ung_series(UngSeries which, std::size_t order) {
    const PartSet E = ung_part_set(which);
    std::vector<HomogeneousElement> parts;
    for (std::size_t n = 0; n <= order; ++n) {
        HomogeneousElement part(Basis::F, n);
        for (const auto& I : compositions_with_parts(E, n))
            part.add_term(omega(I), I.length() % 2 == 0 ? 1 : -1);
        parts.push_back(to_G(part));
    }
    return Series(order, std::move(parts));
}

Series ung_conjectured_inverse(UngSeries which, std::size_t order, std::size_t bound) {
    require_degree("ung_conjectured_inverse", order, bound);
    std::vector<HomogeneousElement> parts;
    for (std::size_t n = 0; n <= order; ++n) {
        TermAccumulator acc(Basis::G, n);
        auto add_class = [&](const Composition& I) {
            for (const auto& s : descent_class(I, bound))
                acc.add(hat(s), 1);
        };
        switch (which) {
        case UngSeries::H1:
            for (const auto& s : all_permutations(n, bound))
                acc.add(hat(s), 1);
            break;
        case UngSeries::H2:
            // Shape (2^p) in S_2p.
            if (n % 2 == 0)
                add_class(Composition(std::vector<int>(n / 2, 2)));
            break;
        case UngSeries::H3:
            // Descent set inside {2, 4, ..., n-2}: every part of C(s) is even.
            for (const auto& I : compositions_with_parts(PartSet::even(), n))
                add_class(I);
            break;
        }
        parts.push_back(std::move(acc).finish());
    }
    return Series(order, std::move(parts));
}

void apply_corruption(Series& s, const Corruption& corruption) {
    auto& part = s.mutable_part(corruption.degree);
    const Permutation key = nth_term(part.terms(), corruption).first;
    part.add_term(key, corruption.delta);
}

void apply_corruption(RibbonSeries& s, const Corruption& corruption) {
    auto& part = s.mutable_part(corruption.degree);
    const Composition key = nth_term(part.terms(), corruption).first;
    part.add_term(key, corruption.delta);
}

VerificationReport verify_theorem(const PartSet& E, std::size_t order, const VerifyOptions& options) {
    require_degree("verify_theorem", order, options.general_degree_bound);
    ReportBuilder report("theorem", E.to_string(), order);
    report.detail("products", "lhs*rhs and rhs*lhs against the unit series");

    const Series lhs = theorem_lhs(E, order);
    Series rhs = to_basis(theorem_rhs(E, order), Basis::G);
    if (options.corruption)
        apply_corruption(rhs, *options.corruption);

    const Series one = unit_series_like(lhs);
    report.residual("lhs*rhs", series_product(lhs, rhs) - one);
    report.residual("rhs*lhs", series_product(rhs, lhs) - one);
    return std::move(report).finish();
}

VerificationReport verify_ung(UngSeries which, std::size_t order, const VerifyOptions& options) {
    require_degree("verify_ung", order, options.general_degree_bound);
    const PartSet E = ung_part_set(which);
    ReportBuilder report("ung-" + to_string(which), E.to_string(), order);
    switch (which) {
    case UngSeries::H1: report.detail("reading", "all permutations"); break;
    case UngSeries::H2: report.detail("reading", "shape (2^p): descent composition (2,...,2) in S_2p"); break;
    case UngSeries::H3: report.detail("reading", "descent set inside {2,4,...,2p-2}: all parts even"); break;
    }

    const Series series = ung_series(which, order);
    Series conjectured = ung_conjectured_inverse(which, order, options.enumeration_bound);
    if (options.corruption)
        apply_corruption(conjectured, *options.corruption);

    report.residual("inverse=conjectured", series_inverse(series) - conjectured);
    report.residual("conjectured=theorem-rhs", conjectured - to_basis(theorem_rhs(E, order), Basis::G));
    // F_omega(I) = G_omega(mirror I), and C(E) is closed under mirror images.
    report.residual("series=theorem-lhs", series - theorem_lhs(E, order));
    return std::move(report).finish();
}

VerificationReport verify_hook_bijection(std::size_t max_n, const VerifyOptions& options) {
    require_degree("verify_hook_bijection", max_n, options.general_degree_bound);
    ReportBuilder report("hook-bijection", "all", max_n, 1);
    std::size_t classes = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto shapes = compositions(n);
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            const auto& I = shapes[i];
            std::size_t count = 0;
            for (const auto& s : descent_class(I, options.enumeration_bound))
                count += is_hook(descent_composition(inverse(s)));
            Coeff excess = Coeff(count) - 1;
            if (options.corruption && options.corruption->degree == n && options.corruption->term == i)
                excess += options.corruption->delta;
            ++classes;
            report.check_entry("one-hook-per-class");
            if (excess != 0)
                report.residual("one-hook-per-class", n, ResidualTerm{"comp", to_string(I), excess});
        }
    }
    report.detail("classes_checked", std::to_string(classes));
    return std::move(report).finish();
}

std::map<Composition, Coeff> tangent_counts(std::size_t weight, std::size_t bound) {
    std::map<Composition, Coeff> counts;
    if (weight % 2 == 0)
        return counts;
    const Composition target = tangent_shape((weight - 1) / 2);
    for (const auto& s : all_permutations(weight, bound))
        if (descent_composition(inverse(s)) == target)
            counts[descent_composition(s)] += 1;
    return counts;
}

VerificationReport verify_qlit(std::size_t order, const VerifyOptions& options) {
    require_degree("verify_qlit", order, options.odd_degree_bound);
    ReportBuilder report("qlit", "all", order);
    report.detail("sign", "(-1)^(p+1) on weight 2p+1");

    RibbonSeries tanh = tanh_inverse_series(order);
    if (options.corruption)
        apply_corruption(tanh, *options.corruption);
    const Series tanh_embedded = embed(tanh, options.enumeration_bound);

    // Commutative image against 1 + sum over I of (-1)^(p+1) c_I F_I, c_I by brute force.
    for (std::size_t d = 0; d <= order; ++d) {
        QSymImage expected;
        if (d == 0) {
            expected.add_term(Composition{}, 1);
        } else if (d % 2 == 1) {
            const std::size_t p = (d - 1) / 2;
            const Coeff sign = p % 2 == 1 ? 1 : -1;
            for (const auto& [I, c] : tangent_counts(d, options.enumeration_bound))
                expected.add_term(I, sign * c);
        }
        QSymImage diff = commutative_image(tanh_embedded[d]);
        diff -= expected;
        report.residual("image=counted", d, diff);
    }

    const Series h = embed(h_series(order), options.enumeration_bound);
    report.residual("inverse(H)=tanh", series_inverse(h) - tanh_embedded);
    report.residual("ribbon-inverse(H)=tanh", series_inverse(h_series(order)) - tanh);
    return std::move(report).finish();
}

VerificationReport verify_ncschur(std::size_t order, const VerifyOptions& options) {
    require_degree("verify_ncschur", order, options.general_degree_bound);
    ReportBuilder report("ncschur", "all", order);

    RibbonSeries lhs = lambda1_sigma1(order);
    if (options.corruption)
        apply_corruption(lhs, *options.corruption);

    std::vector<RibbonElement> parts{RibbonElement::unit()};
    for (std::size_t n = 1; n <= order; ++n)
        parts.push_back(Coeff(2) * h_n(n));
    report.residual("lambda1*sigma1=1+2H", lhs - RibbonSeries(order, std::move(parts)));
    return std::move(report).finish();
}

VerificationReport verify_structure(std::size_t max_n, const VerifyOptions& options) {
    require_degree("verify_structure", max_n, options.general_degree_bound);
    ReportBuilder report("structure", "all", max_n);
    const std::size_t bound = options.enumeration_bound;

    constexpr std::size_t kIntervalMax = 6;
    constexpr std::size_t kMultiplicativeMax = 6;
    constexpr std::size_t kRoundtripMax = 5;
    constexpr std::size_t kAnticonnectedMax = 6;
    report.detail("interval_max_n", std::to_string(std::min(max_n, kIntervalMax)));
    report.detail("multiplicative_max_n", std::to_string(std::min(max_n, kMultiplicativeMax)));
    report.detail("roundtrip_max_n", std::to_string(std::min(max_n, kRoundtripMax)));
    report.detail("anticonnected_max_n", std::to_string(std::min(max_n, kAnticonnectedMax)));
    report.detail("omega_mirror_max_n", std::to_string(max_n));

    for (const char* name : {"descent-class-interval", "omega-mirror", "anticonnected-criterion",
                             "anticonnected-factorization", "S-multiplicative", "G2S-roundtrip"})
        report.check_entry(name);

    for (std::size_t n = 0; n <= max_n; ++n) {
        for (const auto& I : compositions(n)) {
            if (inverse(omega(I)) != omega(mirror(I)))
                report.failure("omega-mirror", n, "omega-mirror " + to_string(I));
            if (n <= kIntervalMax && weak_interval(alpha(I), omega(I)) != descent_class(I, bound))
                report.failure("descent-class-interval", n, "interval " + to_string(I));
            if (n >= 1 && n <= kAnticonnectedMax) {
                const Composition mirrored = mirror(I);
                for (const auto& J : coarsenings(mirrored)) {
                    const bool anticonnected = is_anticonnected(compose(alpha(J), omega(I)));
                    if (anticonnected != (J == mirrored))
                        report.failure("anticonnected-criterion", n,
                                       "anticonnected I=" + to_string(I) + " J=" + to_string(J));
                }
            }
        }

        if (n <= kMultiplicativeMax) {
            for (const auto& s : all_permutations(n, bound)) {
                const auto factors = anticonnected_factors(s);
                Permutation rebuilt;
                for (const auto& f : factors)
                    rebuilt = left_shifted_concat(rebuilt, f);
                const bool factors_ok =
                    rebuilt == s && std::all_of(factors.begin(), factors.end(), [](const Permutation& f) {
                        return is_anticonnected(f);
                    });
                if (!factors_ok)
                    report.failure("anticonnected-factorization", n, "factorization " + to_string(s));

                // S^s computed in G must equal the G-product of the factors' expansions.
                HomogeneousElement expanded = HomogeneousElement::unit(Basis::G);
                for (const auto& f : factors)
                    expanded = product(expanded, to_G(HomogeneousElement::basis_element(Basis::S, f)));
                if (expanded != to_G(HomogeneousElement::basis_element(Basis::S, s)))
                    report.failure("S-multiplicative", n, "multS " + to_string(s));
            }
        }

        if (n <= kRoundtripMax) {
            const auto perms = all_permutations(n, bound);
            for (std::size_t i = 0; i < perms.size(); ++i) {
                const auto& s = perms[i];
                const auto g = HomogeneousElement::basis_element(Basis::G, s);
                auto as_s = to_S(g);
                if (options.corruption && options.corruption->degree == n && options.corruption->term == i)
                    as_s.add_term(s, options.corruption->delta);
                if (to_G(as_s) != g)
                    report.failure("G2S-roundtrip", n, "G->S->G " + to_string(s));
                const auto sb = HomogeneousElement::basis_element(Basis::S, s);
                if (to_S(to_G(sb)) != sb)
                    report.failure("G2S-roundtrip", n, "S->G->S " + to_string(s));
            }
        }
    }
    return std::move(report).finish();
}

VerificationReport verify_oracle(int alphabet_size, std::size_t max_degree, const VerifyOptions& options) {
    require_degree("verify_oracle", max_degree, options.general_degree_bound);
    ReportBuilder report("oracle", "all", max_degree);
    report.detail("alphabet_size", std::to_string(alphabet_size));

    std::vector<std::vector<Permutation>> perms;
    for (std::size_t n = 0; n <= max_degree; ++n)
        perms.push_back(all_permutations(n, options.enumeration_bound));

    for (Basis basis : {Basis::G, Basis::F, Basis::S}) {
        const std::string check = "realized-" + to_string(basis) + "-product";
        report.check_entry(check);
        std::vector<std::vector<NCPolynomial>> realized(max_degree + 1);
        for (std::size_t n = 0; n <= max_degree; ++n)
            for (const auto& s : perms[n])
                realized[n].push_back(realize(HomogeneousElement::basis_element(basis, s), alphabet_size));

        for (std::size_t d = 0; d <= max_degree; ++d) {
            std::size_t pair_index = 0;
            for (std::size_t a = 0; a <= d; ++a) {
                const std::size_t b = d - a;
                for (std::size_t i = 0; i < perms[a].size(); ++i) {
                    const auto xa = HomogeneousElement::basis_element(basis, perms[a][i]);
                    for (std::size_t j = 0; j < perms[b].size(); ++j, ++pair_index) {
                        auto prod = product(xa, HomogeneousElement::basis_element(basis, perms[b][j]));
                        if (basis == Basis::G && options.corruption && options.corruption->degree == d &&
                            options.corruption->term == pair_index)
                            prod.add_term(prod.terms().begin()->first, options.corruption->delta);
                        if (realize(prod, alphabet_size) != ncpoly_product(realized[a][i], realized[b][j]))
                            report.failure(check, d,
                                           to_string(basis) + ":" + to_string(perms[a][i]) + "*" +
                                               to_string(perms[b][j]));
                    }
                }
            }
        }
    }
    return std::move(report).finish();
}

} // namespace fqsym
