#include "vval/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "vval/belief.hpp"
#include "vval/document.hpp"
#include "vval/errors.hpp"
#include "vval/semantics.hpp"

namespace vval::cli {

namespace {

enum class OutputFormat { Text, Machine };

struct Globals {
    Mode mode = Mode::Strict;
    OutputFormat format = OutputFormat::Text;
};

/// Collects key=value pairs; text rendering is chosen per command.
class Report {
public:
    void add(std::string key, std::string value) { pairs_.emplace_back(std::move(key), std::move(value)); }

    void write_machine(std::ostream& out) const
    {
        for (const auto& [k, v] : pairs_) {
            out << k << '=' << v << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> pairs_;
};

ModelDocument open_model(const std::string& ref)
{
    std::error_code ec;
    if (std::filesystem::is_regular_file(ref, ec)) {
        return load_document(ref);
    }
    if (auto text = builtin_document(ref)) {
        return parse_document(*text);
    }
    throw ValidationError(ValidationError::Kind::Malformed,
                          "'" + ref + "' is neither a readable model file nor a built-in model");
}

/// `{a,b}` is an inline state list; anything else is a formula whose truth
/// set is taken.
StateSet read_event(const ModelDocument& doc, const std::string& text, Mode mode)
{
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '{') {
        return parse_state_set(doc.model.space(), text);
    }
    return truth_set(doc.model, parse(text, mode), mode);
}

void write_mass(const StateSpace& space, const MassFunction& m, Report& report)
{
    report.add("focal_sets", std::to_string(m.entries().size()));
    for (const auto& [set, mass] : m.entries()) {
        report.add("mass." + format_set(space, set), mass.str());
    }
}

void write_mass_text(const StateSpace& space, const MassFunction& m, std::ostream& out)
{
    for (const auto& [set, mass] : m.entries()) {
        out << format_set(space, set) << ' ' << mass << '\n';
    }
}

constexpr const char* exploratory_banner =
    "EXPLORATORY: pointwise conditioning skips interpretations that are empty or have probability zero "
    "and does not renormalize";

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Globals globals;
    std::string mode_name = "strict";
    std::string format_name = "text";

    CLI::App app{"Variable-valuation model checker: truth sets, meaning entailment and evidential belief", "vval"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--mode", mode_name, "Placement rule for '=>'")
        ->check(CLI::IsMember({"strict", "extended"}));
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "machine"}));

    std::string model_ref;
    std::string formula_text;
    std::string state_name;
    std::string atom_name;
    std::string measure_name;
    std::string evidence_text;
    std::string event_text;
    std::string of_text;
    std::string given_text;
    std::string rule_name;
    std::string e1_text;
    std::string e2_text;

    std::function<void()> action;

    auto model_arg = [&](CLI::App* sub) {
        sub->add_option("model", model_ref, "Model file, or a built-in model name such as 'coinflip'")->required();
    };
    auto measure_opt = [&](CLI::App* sub) {
        sub->add_option("--measure", measure_name, "Name of a prior declared in the model")->required();
    };

    auto emit = [&](const Report& report, const std::function<void()>& text) {
        if (globals.format == OutputFormat::Machine) {
            report.write_machine(out);
        }
        else {
            text();
        }
    };

    // check
    auto* check = app.add_subcommand("check", "Validate a model and report coherence per atom");
    model_arg(check);
    check->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const StateSpace& space = doc.model.space();
            Report r;
            r.add("states", format_set(space, space.all()));
            for (const auto& [name, v] : doc.model.atoms()) {
                r.add("atom." + name + ".coherent", v.is_coherent() ? "true" : "false");
                r.add("atom." + name + ".constant", v.is_constant() ? "true" : "false");
                r.add("atom." + name + ".truth_set", format_set(space, v.truth_set()));
            }
            for (const auto& [name, m] : doc.measures) {
                r.add("measure." + name, "valid");
            }
            emit(r, [&] {
                out << "model ok: " << space.size() << " states, " << doc.model.atoms().size() << " atoms, "
                    << doc.measures.size() << " measures\n";
                for (const auto& [name, v] : doc.model.atoms()) {
                    out << "atom " << name << ": " << (v.is_coherent() ? "coherent" : "incoherent")
                        << (v.is_constant() ? ", constant" : "") << ", truth set "
                        << format_set(space, v.truth_set()) << '\n';
                }
            });
        };
    });

    // truth-set
    auto* ts = app.add_subcommand("truth-set", "Print the states where a formula is true");
    model_arg(ts);
    ts->add_option("formula", formula_text)->required();
    ts->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const Formula f = parse(formula_text, globals.mode);
            const std::string set = format_set(doc.model.space(), truth_set(doc.model, f, globals.mode));
            Report r;
            r.add("formula", format(f));
            r.add("truth_set", set);
            emit(r, [&] { out << set << '\n'; });
        };
    });

    // interpret
    auto* interp = app.add_subcommand("interpret", "Print a formula's interpretation at one state");
    model_arg(interp);
    interp->add_option("formula", formula_text)->required();
    interp->add_option("state", state_name)->required();
    interp->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const Formula f = parse(formula_text, globals.mode);
            const std::size_t x = doc.model.space().index_of(state_name);
            const std::string set = format_set(doc.model.space(), interpret(doc.model, f, x, globals.mode));
            Report r;
            r.add("formula", format(f));
            r.add("state", state_name);
            r.add("interpretation", set);
            emit(r, [&] { out << set << '\n'; });
        };
    });

    // cohere
    auto* cohere = app.add_subcommand("cohere", "Print the coherent closure of an atom's valuation");
    model_arg(cohere);
    cohere->add_option("atom", atom_name)->required();
    cohere->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const StateSpace& space = doc.model.space();
            const VariableValuation closed = coherence_closure(doc.model, atom_name);
            Report r;
            r.add("atom", atom_name);
            r.add("coherent", is_coherent(doc.model, atom_name) ? "true" : "false");
            for (std::size_t x = 0; x < space.size(); ++x) {
                r.add("closure." + space.name(x), format_set(space, closed.at(x)));
            }
            r.add("truth_set", format_set(space, closed.truth_set()));
            emit(r, [&] {
                for (std::size_t x = 0; x < space.size(); ++x) {
                    out << space.name(x) << " -> " << format_set(space, closed.at(x)) << '\n';
                }
            });
        };
    });

    // bel
    auto* belc = app.add_subcommand("bel", "Evidentially supported belief in an event");
    model_arg(belc);
    measure_opt(belc);
    belc->add_option("--evidence", evidence_text, "Evidence formula")->required();
    belc->add_option("--event", event_text, "Event formula or state list {a,b}")->required();
    belc->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const Formula evidence = parse(evidence_text, globals.mode);
            const StateSet event = read_event(doc, event_text, globals.mode);
            const Rational value = bel(doc.model, doc.measure(measure_name), evidence, event, globals.mode);
            Report r;
            r.add("measure", measure_name);
            r.add("evidence", format(evidence));
            r.add("event", format_set(doc.model.space(), event));
            r.add("bel", value.str());
            emit(r, [&] { out << value << '\n'; });
        };
    });

    // degree
    auto* deg = app.add_subcommand("degree", "Degree of belief in a formula, optionally given another");
    model_arg(deg);
    measure_opt(deg);
    deg->add_option("--of", of_text, "Formula assessed")->required();
    auto* given_opt = deg->add_option("--given", given_text, "Formula conditioned on");
    deg->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const ProbabilityMeasure& prior = doc.measure(measure_name);
            const Formula of = parse(of_text, globals.mode);
            Report r;
            r.add("measure", measure_name);
            r.add("of", format(of));
            Rational value;
            if (given_opt->count() > 0) {
                const Formula given = parse(given_text, globals.mode);
                r.add("given", format(given));
                value = degree_given(doc.model, prior, of, given, globals.mode);
            }
            else {
                value = degree(doc.model, prior, of, globals.mode);
            }
            r.add("degree", value.str());
            emit(r, [&] { out << value << '\n'; });
        };
    });

    // posterior
    auto* post = app.add_subcommand("posterior", "Print a prior, optionally conditioned on an event");
    model_arg(post);
    measure_opt(post);
    auto* post_given = post->add_option("--given", given_text, "Event formula or state list {a,b}");
    post->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const StateSpace& space = doc.model.space();
            ProbabilityMeasure m = doc.measure(measure_name);
            Report r;
            r.add("measure", measure_name);
            if (post_given->count() > 0) {
                const StateSet given = read_event(doc, given_text, globals.mode);
                r.add("given", format_set(space, given));
                m = condition(m, given);
            }
            for (std::size_t x = 0; x < space.size(); ++x) {
                r.add("weight." + space.name(x), m.weight(x).str());
            }
            emit(r, [&] {
                for (std::size_t x = 0; x < space.size(); ++x) {
                    out << space.name(x) << ' ' << m.weight(x) << '\n';
                }
            });
        };
    });

    // mass
    auto* massc = app.add_subcommand("mass", "Mass function induced by evidence");
    model_arg(massc);
    measure_opt(massc);
    massc->add_option("--evidence", evidence_text, "Evidence formula")->required();
    massc->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const Formula evidence = parse(evidence_text, globals.mode);
            const MassFunction m = mass_from_evidence(doc.model, doc.measure(measure_name), evidence, globals.mode);
            Report r;
            r.add("measure", measure_name);
            r.add("evidence", format(evidence));
            write_mass(doc.model.space(), m, r);
            emit(r, [&] { write_mass_text(doc.model.space(), m, out); });
        };
    });

    // combine
    auto* comb = app.add_subcommand("combine", "Combine the mass functions of two pieces of evidence");
    model_arg(comb);
    measure_opt(comb);
    comb->add_option("--rule", rule_name, "Combination rule")
        ->required()
        ->check(CLI::IsMember({"dempster", "pointwise"}));
    comb->add_option("--e1", e1_text, "First evidence formula")->required();
    comb->add_option("--e2", e2_text, "Second evidence formula")->required();
    comb->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const ProbabilityMeasure& prior = doc.measure(measure_name);
            const Formula e1 = parse(e1_text, globals.mode);
            const Formula e2 = parse(e2_text, globals.mode);
            const MassFunction m = rule_name == "dempster"
                                       ? dempster_combine(mass_from_evidence(doc.model, prior, e1, globals.mode),
                                                          mass_from_evidence(doc.model, prior, e2, globals.mode))
                                       : pointwise_combine(doc.model, prior, e1, e2, globals.mode);
            Report r;
            r.add("measure", measure_name);
            r.add("rule", rule_name);
            r.add("e1", format(e1));
            r.add("e2", format(e2));
            write_mass(doc.model.space(), m, r);
            emit(r, [&] { write_mass_text(doc.model.space(), m, out); });
        };
    });

    // pointwise-condition
    auto* pwc = app.add_subcommand("pointwise-condition",
                                   "EXPLORATORY: weighted average of conditioning over the evidence's interpretations");
    model_arg(pwc);
    measure_opt(pwc);
    pwc->add_option("--of", of_text, "Formula assessed")->required();
    pwc->add_option("--given", given_text, "Evidence formula")->required();
    pwc->callback([&] {
        action = [&] {
            const ModelDocument doc = open_model(model_ref);
            const Formula of = parse(of_text, globals.mode);
            const Formula given = parse(given_text, globals.mode);
            const PointwiseConditioning result =
                pointwise_condition_terms(doc.model, doc.measure(measure_name), of, given, globals.mode);
            Report r;
            r.add("exploratory", "true");
            r.add("measure", measure_name);
            r.add("of", format(of));
            r.add("given", format(given));
            r.add("surviving_weight", result.surviving_weight.str());
            r.add("value", result.value.str());
            emit(r, [&] {
                out << exploratory_banner << '\n';
                out << result.value << '\n';
            });
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        err << "run with --help for usage\n";
        return usage;
    }

    globals.mode = mode_name == "extended" ? Mode::Extended : Mode::Strict;
    globals.format = format_name == "machine" ? OutputFormat::Machine : OutputFormat::Text;

    try {
        action();
        return ok;
    }
    catch (const UndefinedError& e) {
        err << "undefined: " << e.what() << '\n';
        return undefined;
    }
    catch (const ParseError& e) {
        err << "formula error: " << e.what() << '\n';
        return invalid_input;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    }
}

} // namespace vval::cli
