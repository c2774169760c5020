#include <doctest.h>

#include "brute_force.hpp"
#include "printing.hpp"
#include "fqsym/identities.hpp"
#include "fqsym/json.hpp"

using namespace fqsym;
namespace bf = fqsym::brute;

namespace {

HomogeneousElement G(std::initializer_list<int> p, const Coeff& c = 1) {
    return HomogeneousElement::basis_element(Basis::G, Permutation(p), c);
}
HomogeneousElement S(std::initializer_list<int> p, const Coeff& c = 1) {
    return HomogeneousElement::basis_element(Basis::S, Permutation(p), c);
}

std::vector<PartSet> theorem_part_sets() {
    return {PartSet::all(), PartSet::even(), PartSet::of({2}), PartSet::of({1, 3}), PartSet::of({3})};
}

const SubCheck& find_check(const VerificationReport& r, std::string_view name) {
    for (const auto& c : r.checks)
        if (c.name == name)
            return c;
    FAIL("missing check " << std::string(name));
    throw std::logic_error("unreachable");
}

std::size_t residual_at(const VerificationReport& r, std::size_t degree) {
    for (const auto& d : r.per_degree)
        if (d.degree == degree)
            return d.nonzero_terms;
    return 0;
}

} // namespace

TEST_CASE("theorem series builders") {
    const auto lhs = theorem_lhs(PartSet::all(), 2);
    CHECK(lhs[0] == HomogeneousElement::unit(Basis::G));
    CHECK(lhs[1] == G({1}, -1));
    CHECK(lhs[2] == G({2, 1}) - G({1, 2}));

    const auto two = theorem_lhs(PartSet::of({2}), 3);
    CHECK(two[1].is_zero());
    CHECK(two[2] == G({1, 2}, -1));
    CHECK(two[3].is_zero());

    CHECK(theorem_lhs(PartSet::of({5}), 4) == Series::unit(4, HomogeneousElement::unit(Basis::G)));

    const auto rhs = theorem_rhs(PartSet::all(), 2);
    CHECK(rhs[0] == HomogeneousElement::unit(Basis::S));
    CHECK(rhs[1] == S({1}));
    CHECK(rhs[2] == S({1, 2}, 2));
    CHECK(theorem_rhs(PartSet::even(), 4)[4] == S({2, 4, 1, 3}) + S({1, 2, 3, 4}));
    CHECK(theorem_rhs(PartSet::of({2}), 4)[4] == S({2, 4, 1, 3}));
}

TEST_CASE("theorem holds for the standard part sets through degree 6") {
    for (const auto& E : theorem_part_sets()) {
        CAPTURE(E.to_string());
        const auto report = verify_theorem(E, 6);
        CHECK(report.ok);
        CHECK(report.per_degree.size() == 7);
        CHECK(find_check(report, "lhs*rhs").ok);
        CHECK(find_check(report, "rhs*lhs").ok);
    }
    CHECK(verify_theorem(PartSet::all(), 0).ok);
    CHECK(verify_theorem(PartSet::of({5}), 4).ok);
    CHECK(verify_theorem(PartSet::odd(), 5).ok);
}

TEST_CASE("theorem checked through the S basis product") {
    // Independent route: multiply in S with the single-term concatenation rule.
    for (const auto& E : theorem_part_sets()) {
        const auto lhs = to_basis(theorem_lhs(E, 6), Basis::S);
        const auto rhs = theorem_rhs(E, 6);
        const auto unit = Series::unit(6, HomogeneousElement::unit(Basis::S));
        CHECK(series_product(lhs, rhs) == unit);
        CHECK(series_product(rhs, lhs) == unit);
    }
}

TEST_CASE("theorem by direct definitions on small degrees") {
    // Builds both sides from brute-force class extrema and inversion-set
    // filtering, without the library's omega, diam or down-set routines.
    const std::size_t order = 5;
    std::vector<HomogeneousElement> lhs_parts;
    std::vector<HomogeneousElement> rhs_parts;
    for (std::size_t n = 0; n <= order; ++n) {
        HomogeneousElement lhs(Basis::G, n);
        HomogeneousElement rhs(Basis::G, n);
        for (const auto& parts : bf::compositions(static_cast<int>(n))) {
            if (n == 0) {
                lhs.add_term(Permutation{}, 1);
                rhs.add_term(Permutation{}, 1);
                continue;
            }
            const auto top = bf::extremal(parts, true);
            lhs.add_term(bf::to_perm(top), parts.size() % 2 == 0 ? 1 : -1);
            // diam(K) = alpha(K) o omega(K)^-1
            const auto d = bf::compose(bf::extremal(parts, false), bf::inverse(top));
            const auto inv = bf::inversions(d);
            for (const auto& t : bf::symmetric_group(n))
                if (bf::subset(bf::inversions(t), inv))
                    rhs.add_term(bf::to_perm(t), 1);
        }
        lhs_parts.push_back(std::move(lhs));
        rhs_parts.push_back(std::move(rhs));
    }
    const Series lhs(order, lhs_parts);
    const Series rhs(order, rhs_parts);
    CHECK(lhs == theorem_lhs(PartSet::all(), order));
    CHECK(rhs == to_basis(theorem_rhs(PartSet::all(), order), Basis::G));
    CHECK(series_product(lhs, rhs) == unit_series_like(lhs));
}

TEST_CASE("Ung series and conjectured inverses") {
    CHECK(ung_series(UngSeries::H1, 1)[1] == G({1}, -1));
    CHECK(ung_series(UngSeries::H2, 2)[2] == G({1, 2}, -1));
    const auto h3 = ung_series(UngSeries::H3, 5);
    for (std::size_t d = 1; d <= 5; d += 2)
        CHECK(h3[d].is_zero());

    CHECK(ung_conjectured_inverse(UngSeries::H1, 2)[2] == G({1, 2}, 2));
    CHECK(ung_conjectured_inverse(UngSeries::H2, 2)[2] == G({1, 2}));
    for (auto which : {UngSeries::H1, UngSeries::H2, UngSeries::H3})
        CHECK(ung_conjectured_inverse(which, 0)[0] == HomogeneousElement::unit(Basis::G));

    const auto inv = series_inverse(ung_series(UngSeries::H1, 2));
    CHECK(inv[1] == G({1}));
    CHECK(inv[2] == G({1, 2}, 2));

    CHECK(ung_part_set(UngSeries::H2).to_string() == "set:2");
    CHECK(parse_ung_series("h3") == UngSeries::H3);
    CHECK_THROWS(parse_ung_series("h4"));
}

TEST_CASE("Ung conjectures hold at small degrees") {
    for (auto which : {UngSeries::H1, UngSeries::H2, UngSeries::H3}) {
        CAPTURE(to_string(which));
        const auto report = verify_ung(which, 6);
        CHECK(report.ok);
        for (const char* name : {"inverse=conjectured", "conjectured=theorem-rhs", "series=theorem-lhs"})
            CHECK(find_check(report, name).ok);
        bool has_reading = false;
        for (const auto& [key, value] : report.details)
            has_reading = has_reading || key == "reading";
        CHECK(has_reading);
    }
    CHECK(verify_ung(UngSeries::H3, 1).ok);
}

TEST_CASE("conjectured H2 inverse sums over a single descent class") {
    // Brute force: sum of G_hat(s) over s in S_4 with descent shape (2,2).
    HomogeneousElement expected(Basis::G, 4);
    for (const auto& p : bf::descent_class({2, 2}))
        expected.add_term(hat(bf::to_perm(p)), 1);
    CHECK(ung_conjectured_inverse(UngSeries::H2, 4)[4] == expected);
    CHECK(ung_conjectured_inverse(UngSeries::H2, 5)[5].is_zero());
}

TEST_CASE("hook bijection") {
    const auto report = verify_hook_bijection(4);
    CHECK(report.ok);
    CHECK(report.per_degree.front().degree == 1);
    bool found = false;
    for (const auto& [key, value] : report.details)
        if (key == "classes_checked") {
            CHECK(value == "15");
            found = true;
        }
    CHECK(found);
    CHECK(verify_hook_bijection(7).ok);
}

TEST_CASE("hyperbolic tangent checks") {
    const auto report = verify_qlit(7);
    CHECK(find_check(report, "image=counted").ok);
    // The literal (1,2^p) ribbons do not invert H; the inverse lives on (2^p,1).
    CHECK_FALSE(find_check(report, "inverse(H)=tanh").ok);
    CHECK_FALSE(find_check(report, "ribbon-inverse(H)=tanh").ok);
    CHECK_FALSE(report.ok);
    CHECK(residual_at(report, 1) == 0);
    CHECK(residual_at(report, 2) == 0);
    CHECK(residual_at(report, 3) > 0);
    for (std::size_t d = 0; d <= 7; d += 2)
        CHECK(residual_at(report, d) == 0);
    CHECK(verify_qlit(1).ok);
    CHECK(verify_qlit(2).ok);
}

TEST_CASE("noncommutative Schur sum") {
    CHECK(verify_ncschur(8).ok);
    CHECK(verify_ncschur(0).ok);
}

TEST_CASE("structure suite") {
    const auto report = verify_structure(3);
    CHECK(report.ok);
    CHECK(report.checks.size() >= 4);
    CHECK(verify_structure(0).ok);
    CHECK(verify_structure(6).ok);
}

TEST_CASE("realization oracle") {
    const auto report = verify_oracle(3, 4);
    CHECK(report.ok);
    CHECK(find_check(report, "realized-G-product").ok);
    CHECK(find_check(report, "realized-F-product").ok);
}

TEST_CASE("degree bounds") {
    CHECK_THROWS_AS(verify_theorem(PartSet::all(), 9), BoundExceeded);
    CHECK_THROWS_AS(verify_qlit(10), BoundExceeded);
    CHECK_THROWS_AS(verify_hook_bijection(9), BoundExceeded);
    CHECK_THROWS_AS(ung_conjectured_inverse(UngSeries::H1, 10), BoundExceeded);
    VerifyOptions small;
    small.general_degree_bound = 4;
    CHECK_THROWS_AS(verify_ung(UngSeries::H1, 5, small), BoundExceeded);
}

TEST_CASE("negative controls flip every verifier") {
    VerifyOptions options;

    SUBCASE("every coefficient of the theorem right-hand side") {
        const auto rhs_g = to_basis(theorem_rhs(PartSet::all(), 4), Basis::G);
        for (std::size_t term = 0; term < rhs_g[4].size(); ++term) {
            options.corruption = Corruption{4, term, 1};
            const auto report = verify_theorem(PartSet::all(), 4, options);
            CHECK_FALSE(report.ok);
            CHECK(residual_at(report, 4) > 0);
            for (std::size_t d = 0; d < 4; ++d)
                CHECK(residual_at(report, d) == 0);
        }
    }
    SUBCASE("conjectured inverse") {
        options.corruption = Corruption{3, 0, -2};
        const auto report = verify_ung(UngSeries::H1, 4, options);
        CHECK_FALSE(report.ok);
        CHECK(residual_at(report, 3) > 0);
    }
    SUBCASE("hook counts") {
        options.corruption = Corruption{3, 1, 1};
        const auto report = verify_hook_bijection(4, options);
        CHECK_FALSE(report.ok);
        CHECK(residual_at(report, 3) == 1);
    }
    SUBCASE("Schur sum") {
        options.corruption = Corruption{2, 0, 1};
        CHECK(residual_at(verify_ncschur(3, options), 2) > 0);
    }
    SUBCASE("structure") {
        options.corruption = Corruption{3, 2, 1};
        const auto report = verify_structure(3, options);
        CHECK_FALSE(report.ok);
        CHECK(residual_at(report, 3) > 0);
    }
    SUBCASE("oracle") {
        options.corruption = Corruption{3, 0, 1};
        CHECK_FALSE(verify_oracle(3, 3, options).ok);
    }
    SUBCASE("missing term") {
        options.corruption = Corruption{2, 99, 1};
        CHECK_THROWS_AS(verify_theorem(PartSet::all(), 2, options), std::out_of_range);
    }
}

TEST_CASE("apply_corruption") {
    auto s = theorem_lhs(PartSet::all(), 2);
    apply_corruption(s, Corruption{2, 1, 5});
    CHECK(s[2] == G({2, 1}, 6) - G({1, 2}));
    apply_corruption(s, Corruption{1, 0, 1});
    CHECK(s[1].is_zero());
    CHECK_THROWS_AS(apply_corruption(s, Corruption{1, 0, 1}), std::out_of_range);
    CHECK_THROWS_AS(apply_corruption(s, Corruption{3, 0, 1}), std::out_of_range);
}

TEST_CASE("reports serialize deterministically") {
    const auto a = to_json(verify_theorem(PartSet::even(), 4)).dump();
    const auto b = to_json(verify_theorem(PartSet::even(), 4)).dump();
    CHECK(a == b);
    const auto j = Json::parse(a);
    CHECK(j["identity"] == "theorem");
    CHECK(j["parameters"]["parts"] == "even");
    CHECK(j["parameters"]["max_degree"] == 4);
    CHECK(j["ok"] == true);
    CHECK(j["per_degree"].size() == 5);
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(to_json(verify_theorem(PartSet::even(), 2), true).contains("elapsed_ms"));

    VerifyOptions options;
    options.corruption = Corruption{2, 0, 1};
    const auto bad = to_json(verify_theorem(PartSet::all(), 2, options));
    CHECK(bad["ok"] == false);
    const auto& sample = bad["per_degree"][2]["sample"];
    REQUIRE(sample.size() >= 1);
    CHECK(sample[0].contains("perm"));
    CHECK(sample[0].contains("coeff"));
}
