#pragma once

// Command-line front end. `run` is the whole program minus main(), so it can
// be driven from tests with string streams.
//
// Exit codes: 0 success, 1 domain error (reducible polynomial, wild prime,
// undefined invariant, failed check), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equivalence.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "json.hpp"
#include "number_field.hpp"
#include "padic_form.hpp"
#include "poly_parse.hpp"
#include "reference_cases.hpp"
#include "splitting.hpp"
#include "trace_form.hpp"

namespace ramify::cli {

namespace detail {

struct Output {
    std::ostream& out;
    std::string format;

    void emit(const json& j) const {
        if (format == "json")
            out << j.dump(2) << "\n";
        else
            out << to_text(j);
    }
};

inline std::vector<std::uint64_t> tame_disc_primes(const NumberField& L, std::uint64_t pmax, std::vector<std::int64_t>& wild) {
    std::set<std::uint64_t> ps;
    for (const auto& [q, e] : factor_integer(L.disc())) ps.insert(to_u64(q));
    for (auto q : primes_up_to(pmax)) ps.insert(q);
    std::vector<std::uint64_t> out;
    for (auto q : ps) {
        if (split_prime(L, Place(static_cast<std::int64_t>(q))).wild())
            wild.push_back(static_cast<std::int64_t>(q));
        else
            out.push_back(q);
    }
    return out;
}

inline NumberField read_field(const std::string& text) { return NumberField(parse_poly_source(text)); }

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Ramification invariants and local trace forms of number fields", "ramify"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string poly, poly2;
    std::int64_t prime = 0;
    std::uint64_t bound = 1000, pmax = 10;
    bool oracle_only = false, batch = false;

    auto* field_cmd = app.add_subcommand("field", "Maximal order, discriminant and signature");
    field_cmd->add_option("poly", poly, "Defining polynomial")->required();

    auto add_prime_cmd = [&](const char* name, const char* desc) {
        auto* c = app.add_subcommand(name, desc);
        c->add_option("poly", poly, "Defining polynomial")->required();
        c->add_option("-p,--prime", prime, "Prime, or -1 for the infinite place")->required();
        return c;
    };
    auto* split_cmd = add_prime_cmd("split", "Splitting type (e, f) of a prime");
    auto* inv_cmd = add_prime_cmd("invariants", "alpha, beta, nu and ramification flags");
    auto* aform_cmd = add_prime_cmd("aform", "The unimodular form a_p");
    auto* trace_cmd = add_prime_cmd("trace", "Predicted and computed local trace forms");
    trace_cmd->add_flag("--oracle-only", oracle_only, "Only decompose the trace Gram matrix (allowed at wild primes)");

    auto* verify_cmd = app.add_subcommand("verify", "Check the predicted local trace form at every tame prime of the discriminant");
    verify_cmd->add_option("poly", poly, "Defining polynomial")->required();
    verify_cmd->add_option("--pmax", pmax, "Also check every prime up to this bound");

    auto* compare_cmd = app.add_subcommand("compare", "Compare alpha_p of two fields for p up to a bound");
    compare_cmd->add_option("poly", poly, "First polynomial");
    compare_cmd->add_option("poly2", poly2, "Second polynomial");
    compare_cmd->add_option("--bound", bound, "Prime bound")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    compare_cmd->add_flag("--batch", batch, "Read polynomials from stdin, one per line, and compare every pair");

    auto* check_cmd = app.add_subcommand("paper-check", "Reproduce the published reference values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (const char* seed = std::getenv("RAMIFY_SEED")) {
        try {
            default_factor_seed() = std::stoull(seed);
        } catch (const std::exception&) {
            err << "error: RAMIFY_SEED must be a non-negative integer\n";
            return 2;
        }
    }

    const detail::Output o{out, format};
    try {
        if (field_cmd->parsed()) {
            o.emit(to_json(detail::read_field(poly)));
        } else if (split_cmd->parsed()) {
            o.emit(to_json(split_prime(detail::read_field(poly), Place(prime))));
        } else if (inv_cmd->parsed()) {
            o.emit(to_json(ramification_invariants(detail::read_field(poly), Place(prime))));
        } else if (aform_cmd->parsed()) {
            o.emit(to_json(a_form(detail::read_field(poly), Place(prime))));
        } else if (trace_cmd->parsed()) {
            const NumberField L = detail::read_field(poly);
            const Place p(prime);
            if (oracle_only) {
                json j;
                j["p"] = p.value();
                j["oracle"] = oracle_local_trace(L, p).str();
                o.emit(j);
            } else {
                o.emit(to_json(verify_local_trace(L, p)));
            }
        } else if (verify_cmd->parsed()) {
            const NumberField L = detail::read_field(poly);
            std::vector<std::int64_t> wild;
            json results = json::array();
            bool all = true;
            for (auto q : detail::tame_disc_primes(L, pmax, wild)) {
                auto v = verify_local_trace(L, Place(static_cast<std::int64_t>(q)));
                all &= v.match == true;
                results.push_back(to_json(v));
            }
            json j;
            j["polynomial"] = render_poly(L.min_poly());
            j["results"] = results;
            j["skipped_wild"] = wild;
            j["all_match"] = all;
            o.emit(j);
            return all ? 0 : 1;
        } else if (compare_cmd->parsed()) {
            if (batch) {
                std::vector<NumberField> fields;
                std::vector<std::string> names;
                for (std::string line; std::getline(in, line);) {
                    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                    fields.push_back(detail::read_field(line));
                    names.push_back(render_poly(fields.back().min_poly()));
                }
                json reports = json::array();
                for (std::size_t i = 0; i < fields.size(); ++i)
                    for (std::size_t k = i + 1; k < fields.size(); ++k) {
                        json r = to_json(compare_fields(fields[i], fields[k], bound));
                        r["K"] = names[i];
                        r["L"] = names[k];
                        reports.push_back(r);
                    }
                json j;
                j["bound"] = bound;
                j["reports"] = reports;
                o.emit(j);
            } else {
                if (poly.empty() || poly2.empty()) {
                    err << "compare: two polynomials required (or --batch)\n";
                    return 2;
                }
                o.emit(to_json(compare_fields(detail::read_field(poly), detail::read_field(poly2), bound)));
            }
        } else if (check_cmd->parsed()) {
            json cases = json::array();
            int failed = 0;
            for (const auto& c : reference_cases()) {
                bool ok = false;
                try {
                    ok = c.check();
                } catch (const std::exception&) {
                    ok = false;
                }
                failed += !ok;
                if (format == "text") out << (ok ? "PASS " : "FAIL ") << c.name << "\n";
                cases.push_back({{"name", c.name}, {"pass", ok}});
            }
            if (format == "json") {
                json j;
                j["cases"] = cases;
                j["failed"] = failed;
                o.emit(j);
            } else {
                out << "failed: " << failed << "\n";
            }
            return failed ? 1 : 0;
        }
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_consistency& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    std::vector<const char*> argv{"ramify"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err, in);
}

}  // namespace ramify::cli
