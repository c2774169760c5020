#include "fqsym/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>
#include <variant>

#include "fqsym/json.hpp"

namespace fqsym::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

VerifyOptions options_for(const CliConfig& config) {
    VerifyOptions options;
    options.enumeration_bound = config.enumeration_bound;
    if (config.enumeration_bound != kDefaultEnumerationBound) {
        options.general_degree_bound = config.enumeration_bound;
        options.odd_degree_bound = config.enumeration_bound;
    }
    options.corruption = config.corruption;
    return options;
}

void print_report(const VerificationReport& report, const CliConfig& config, std::ostream& out) {
    if (config.output == "json") {
        out << to_json(report, config.timing).dump() << '\n';
        return;
    }
    out << (report.ok ? "[PASS] " : "[FAIL] ") << report.identity << "  parts=" << report.parts
        << "  max_degree=" << report.max_degree;
    if (config.timing)
        out << "  (" << report.elapsed.count() << " ms)";
    out << '\n';
    for (const auto& [key, value] : report.details)
        out << "    " << key << ": " << value << '\n';
    for (const auto& c : report.checks)
        out << "    check " << c.name << ": " << (c.ok ? "ok" : "FAILED") << " (" << c.failures << " failures)\n";
    for (const auto& d : report.per_degree) {
        out << "    degree " << d.degree << ": " << d.nonzero_terms << " residual terms\n";
        for (const auto& t : d.sample)
            out << "        " << t.coeff.str() << "  " << t.kind << " " << t.key << '\n';
    }
}

template <typename E>
void print_element_text(const E& x, std::ostream& out) {
    if (x.is_zero()) {
        out << "    0\n";
        return;
    }
    for (const auto& [key, c] : x.terms())
        out << "    " << c.str() << "  " << to_string(key) << '\n';
}

std::string basis_label(const HomogeneousElement& x) { return to_string(x.basis()); }
std::string basis_label(const RibbonElement&) { return "R"; }

using AnySeries = std::variant<Series, RibbonSeries>;

bool is_ung_series(const std::string& name) { return name == "h1" || name == "h2" || name == "h3"; }

AnySeries build_series(const CliConfig& config, std::size_t order) {
    const auto& name = config.series;
    if ((is_ung_series(name) || name == "schur-h") && config.parts_given)
        throw UsageError("--parts conflicts with --series " + name + " (its part set is fixed)");
    if (name == "theorem-lhs")
        return theorem_lhs(parse_parts(config.parts), order);
    if (name == "theorem-rhs")
        return theorem_rhs(parse_parts(config.parts), order);
    if (is_ung_series(name))
        return ung_series(parse_ung_series(name), order);
    if (name == "schur-h")
        return h_series(order);
    throw UsageError("unknown series '" + name + "'");
}

/// Converts to the requested output basis; empty means the series' own basis.
AnySeries convert(AnySeries s, const std::string& basis, std::size_t bound) {
    if (basis.empty())
        return s;
    if (auto* ribbons = std::get_if<RibbonSeries>(&s)) {
        if (basis == "R")
            return s;
        return to_basis(embed(*ribbons, bound), parse_basis(basis));
    }
    if (basis == "R")
        throw UsageError("basis R is only available for --series schur-h");
    return to_basis(std::get<Series>(s), parse_basis(basis));
}

std::string part_set_label(const CliConfig& config) {
    if (config.series == "theorem-lhs" || config.series == "theorem-rhs")
        return parse_parts(config.parts).to_string();
    if (is_ung_series(config.series))
        return ung_part_set(parse_ung_series(config.series)).to_string();
    return "all";
}

void require_within_bound(std::size_t degree, const CliConfig& config) {
    if (degree > config.enumeration_bound)
        throw BoundExceeded("degree " + std::to_string(degree) + " exceeds the enumeration bound " +
                            std::to_string(config.enumeration_bound) + " (set FQSYM_MAX_ENUM to raise it)");
}

int run_expand(const CliConfig& config, std::ostream& out) {
    if (!config.degree)
        throw UsageError("expand needs --degree");
    const std::size_t degree = *config.degree;
    require_within_bound(degree, config);
    const AnySeries series = convert(build_series(config, degree), config.basis, config.enumeration_bound);
    std::visit(
        [&](const auto& s) {
            const auto& part = s[degree];
            if (config.output == "json") {
                Json j{{"series", config.series}, {"part_set", part_set_label(config)}};
                const Json body = to_json(part);
                for (const auto& [key, value] : body.items())
                    j[key] = value;
                out << j.dump() << '\n';
            } else {
                out << config.series << "  parts=" << part_set_label(config) << "  degree " << degree << " in "
                    << basis_label(part) << '\n';
                print_element_text(part, out);
            }
        },
        series);
    return kOk;
}

int run_invert(const CliConfig& config, std::ostream& out) {
    require_within_bound(config.max_degree, config);
    const AnySeries series = build_series(config, config.max_degree);
    AnySeries inverse_series =
        std::visit([](const auto& s) -> AnySeries { return series_inverse(s); }, series);
    inverse_series = convert(std::move(inverse_series), config.basis, config.enumeration_bound);
    std::visit(
        [&](const auto& s) {
            if (config.output == "json") {
                Json parts = Json::array();
                for (const auto& part : s.parts())
                    parts.push_back(to_json(part));
                out << Json{{"series", config.series},
                            {"part_set", part_set_label(config)},
                            {"order", s.order()},
                            {"inverse", std::move(parts)}}
                           .dump()
                    << '\n';
            } else {
                out << "inverse of " << config.series << "  parts=" << part_set_label(config)
                    << "  order=" << s.order() << '\n';
                for (const auto& part : s.parts()) {
                    out << "  degree " << part.degree() << " (" << basis_label(part) << ")\n";
                    print_element_text(part, out);
                }
            }
        },
        inverse_series);
    return kOk;
}

int run_verify(const CliConfig& config, std::ostream& out) {
    require_within_bound(config.max_degree, config);
    const auto options = options_for(config);
    VerificationReport report;
    if (config.target == "theorem") {
        report = verify_theorem(parse_parts(config.parts), config.max_degree, options);
    } else if (config.target == "ung") {
        if (config.parts_given)
            throw UsageError("--parts conflicts with verify ung (the part set follows --which)");
        report = verify_ung(parse_ung_series(config.which), config.max_degree, options);
    } else if (config.target == "extras") {
        if (config.parts_given)
            throw UsageError("--parts is not used by verify extras");
        if (config.which == "hooks")
            report = verify_hook_bijection(config.max_degree, options);
        else if (config.which == "qlit")
            report = verify_qlit(config.max_degree, options);
        else if (config.which == "ncschur")
            report = verify_ncschur(config.max_degree, options);
        else if (config.which == "structure")
            report = verify_structure(config.max_degree, options);
        else
            throw UsageError("unknown extras check '" + config.which + "' (hooks, qlit, ncschur, structure)");
    } else {
        throw UsageError("unknown verify target '" + config.target + "'");
    }
    print_report(report, config, out);
    return report.ok ? kOk : kCheckFailed;
}

int run_oracle(const CliConfig& config, std::ostream& out) {
    require_within_bound(config.max_degree, config);
    const auto report = verify_oracle(config.alphabet, config.max_degree, options_for(config));
    print_report(report, config, out);
    return report.ok ? kOk : kCheckFailed;
}

} // namespace

PartSet parse_parts(std::string_view spec) {
    if (spec == "all")
        return PartSet::all();
    if (spec == "even")
        return PartSet::even();
    if (spec == "odd")
        return PartSet::odd();
    constexpr std::string_view prefix = "set:";
    if (spec.substr(0, prefix.size()) != prefix)
        throw std::invalid_argument("malformed part set '" + std::string(spec) + "' (all, even, odd, set:a,b,...)");
    std::set<int> parts;
    std::string_view rest = spec.substr(prefix.size());
    while (true) {
        const auto comma = rest.find(',');
        const auto token = rest.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
            throw std::invalid_argument("malformed part '" + std::string(token) + "' in '" + std::string(spec) + "'");
        if (value < 1)
            throw std::invalid_argument("parts must be positive, got " + std::to_string(value));
        parts.insert(value);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    return PartSet::of(std::move(parts));
}

Corruption parse_corruption(std::string_view spec) {
    std::vector<std::string_view> fields;
    while (true) {
        const auto colon = spec.find(':');
        fields.push_back(spec.substr(0, colon));
        if (colon == std::string_view::npos)
            break;
        spec.remove_prefix(colon + 1);
    }
    if (fields.size() < 2 || fields.size() > 3)
        throw std::invalid_argument("fault spec must be degree:term[:delta]");
    Corruption c;
    c.degree = parse_size(fields[0], "fault degree");
    c.term = parse_size(fields[1], "fault term");
    if (fields.size() == 3)
        c.delta = Coeff(std::string(fields[2]));
    if (c.delta == 0)
        throw std::invalid_argument("fault delta must be nonzero");
    return c;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.output != "text" && config.output != "json")
            throw UsageError("--output must be text or json");
        if (config.command == "verify")
            return run_verify(config, out);
        if (config.command == "expand")
            return run_expand(config, out);
        if (config.command == "invert")
            return run_invert(config, out);
        if (config.command == "oracle")
            return run_oracle(config, out);
        throw UsageError("unknown command '" + config.command + "'");
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* max_enum_env) {
    CliConfig config;
    std::string fault;

    CLI::App app{"Exact FQSym / NSym series inversion and identity verifier", "fqsym"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the verb
    app.add_option("--output", config.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", config.timing, "include elapsed time in reports");

    auto* verify = app.add_subcommand("verify", "verify an identity degree by degree");
    verify->require_subcommand(1);
    auto add_fault = [&](CLI::App* cmd) {
        cmd->add_option("--inject-fault", fault, "perturb one candidate coefficient: degree:term[:delta]");
    };
    auto* theorem = verify->add_subcommand("theorem", "inverse of the alternating omega series");
    theorem->add_option("--parts", config.parts, "part set: all, even, odd, set:a,b,...");
    theorem->add_option("--max-degree", config.max_degree);
    add_fault(theorem);
    auto* ung = verify->add_subcommand("ung", "Ung's conjectured inverses");
    ung->add_option("--which", config.which)->required()->check(CLI::IsMember({"h1", "h2", "h3"}));
    ung->add_option("--max-degree", config.max_degree);
    ung->add_option("--parts", config.parts);
    add_fault(ung);
    auto* extras = verify->add_subcommand("extras", "hook bijection, tangent inverse, Schur sum, structure");
    extras->add_option("--which", config.which)
        ->required()
        ->check(CLI::IsMember({"hooks", "qlit", "ncschur", "structure"}));
    extras->add_option("--max-degree", config.max_degree);
    extras->add_option("--parts", config.parts);
    add_fault(extras);

    const std::vector<std::string> series_names{"theorem-lhs", "theorem-rhs", "h1", "h2", "h3", "schur-h"};
    auto* expand = app.add_subcommand("expand", "print one homogeneous part of a series");
    expand->add_option("--series", config.series)->required()->check(CLI::IsMember(series_names));
    std::size_t degree = 0;
    expand->add_option("--degree", degree)->required();
    expand->add_option("--basis", config.basis, "F, G, S (or R for schur-h)");
    expand->add_option("--parts", config.parts);

    auto* invert = app.add_subcommand("invert", "invert a series up to a degree");
    invert->add_option("--series", config.series)->required()->check(CLI::IsMember(series_names));
    invert->add_option("--max-degree", config.max_degree);
    invert->add_option("--basis", config.basis, "F, G, S (or R for schur-h)");
    invert->add_option("--parts", config.parts);

    auto* oracle = app.add_subcommand("oracle", "check product rules against the word realization");
    oracle->add_option("--alphabet", config.alphabet)->check(CLI::PositiveNumber);
    oracle->add_option("--max-degree", config.max_degree);
    add_fault(oracle);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (max_enum_env != nullptr && *max_enum_env != '\0')
            config.enumeration_bound = parse_size(max_enum_env, "FQSYM_MAX_ENUM");
        if (!fault.empty())
            config.corruption = parse_corruption(fault);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    auto given = [](CLI::App* cmd, const char* name) { return cmd->get_option(name)->count() > 0; };
    if (*verify) {
        config.command = "verify";
        CLI::App* chosen = *theorem ? theorem : (*ung ? ung : extras);
        config.target = chosen->get_name();
        config.parts_given = given(chosen, "--parts");
    } else if (*expand) {
        config.command = "expand";
        config.degree = degree;
        config.parts_given = given(expand, "--parts");
    } else if (*invert) {
        config.command = "invert";
        config.parts_given = given(invert, "--parts");
    } else if (*oracle) {
        config.command = "oracle";
        if (!given(oracle, "--max-degree"))
            config.max_degree = 5;
    }
    return run(config, out, err);
}

} // namespace fqsym::cli
