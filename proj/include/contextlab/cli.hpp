#pragma once

/*
 * contextlab command line front end.
 *
 * Exit codes: 0 success (findings such as "no two-valued states" are not
 * failures), 2 usage error, 3 input or validation error, 4 budget exceeded.
 */

#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contextlab/enumeration.hpp"
#include "contextlab/hypergraph.hpp"
#include "contextlab/linalg.hpp"
#include "contextlab/quantum.hpp"
#include "contextlab/report.hpp"

namespace contextlab::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInput = 3, kBudget = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SourceOptions {
    std::string preset;
    std::string file;
    std::string csv;
    std::size_t jobs = 1;
    std::size_t max_bits = kDefaultSweepBits;
};

struct Loaded {
    ContextHypergraph graph;
    std::string source;
};

inline Loaded load(const SourceOptions& o) {
    if (o.preset.empty() == o.file.empty()) throw UsageError("give exactly one of --preset <name> or <file>");
    if (!o.preset.empty()) {
        try {
            return {preset(o.preset), "preset " + o.preset};
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    std::ifstream in(o.file);
    if (!in) throw InputError("cannot read '" + o.file + "'");
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    try {
        return {parse_hypergraph(text), "file " + o.file};
    } catch (const ParseError& e) {
        throw InputError(o.file + ": " + e.what());
    }
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

/// "a/b,c,..." -> exact vector
inline Vector<Rational> parse_vector(const std::string& text) {
    std::vector<Rational> comps;
    std::stringstream ss(text);
    try {
        for (std::string item; std::getline(ss, item, ',');) comps.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
        throw UsageError("bad vector '" + text + "': " + e.what());
    }
    if (comps.empty()) throw UsageError("empty vector");
    return Vector<Rational>(std::move(comps));
}

inline Vector<double> to_double(const Vector<Rational>& v) {
    std::vector<double> d;
    for (const auto& c : v.components()) d.push_back(c.to_double());
    return Vector<double>(std::move(d));
}

inline void add_source_options(CLI::App* sub, SourceOptions& o, bool sweeps, bool csv) {
    sub->add_option("file", o.file, "hypergraph file");
    sub->add_option("--preset", o.preset, "built-in hypergraph (ceg18, fork3, std2, std3, std4)");
    if (csv) sub->add_option("--csv", o.csv, "write histogram CSV (sum,count) to this path");
    if (sweeps) {
        sub->add_option("--jobs", o.jobs, "sweep partitions run in parallel")->check(CLI::PositiveNumber);
        sub->add_option("--max-bits", o.max_bits, "largest observable count allowed for 2^N sweeps");
    }
}

inline std::string additive_csv_path(const std::string& path) {
    auto dot = path.find_last_of('.');
    auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ".additive";
    return path.substr(0, dot) + ".additive" + path.substr(dot);
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Householder operators and classical value assignments on context hypergraphs", "contextlab"};
    app.require_subcommand(1);

    SourceOptions src;
    std::string scheme_text = "householder";
    std::size_t minus_slot = 1;
    std::size_t vertex_cap = kDefaultColoringVertexCap;

    auto* validate_cmd = app.add_subcommand("validate", "check orthogonality, completeness and occurrences");
    add_source_options(validate_cmd, src, false, false);
    auto* states_cmd = app.add_subcommand("states", "enumerate two-valued {0,1} states");
    add_source_options(states_cmd, src, false, false);
    auto* products_cmd = app.add_subcommand("products", "histogram of context-product sums over all +-1 assignments");
    add_source_options(products_cmd, src, true, true);
    auto* additive_cmd = app.add_subcommand("additive", "histogram of context sums over all +-1 assignments");
    add_source_options(additive_cmd, src, true, true);
    auto* quantum_cmd = app.add_subcommand("quantum", "operator predictions for an eigenvalue scheme");
    add_source_options(quantum_cmd, src, false, false);
    quantum_cmd->add_option("--scheme", scheme_text, "householder | projector | primes:p1,... | custom:v1,...");
    quantum_cmd->add_option("--minus-slot", minus_slot, "1-based slot carrying -1 in context sums")
        ->check(CLI::PositiveNumber);
    auto* chromatic_cmd = app.add_subcommand("chromatic", "exact chromatic number of the shared-context graph");
    add_source_options(chromatic_cmd, src, false, false);
    chromatic_cmd->add_option("--max-vertices", vertex_cap, "vertex cap for the exact search");
    auto* report_cmd = app.add_subcommand("report", "all analyses");
    add_source_options(report_cmd, src, true, true);
    report_cmd->add_option("--scheme", scheme_text, "eigenvalue scheme for the quantum section");
    report_cmd->add_option("--minus-slot", minus_slot, "1-based slot carrying -1 in context sums")
        ->check(CLI::PositiveNumber);
    report_cmd->add_option("--max-vertices", vertex_cap, "vertex cap for the exact coloring");

    auto* hh_cmd = app.add_subcommand("householder", "ad hoc reflector operations on inline vectors");
    hh_cmd->require_subcommand(1);
    std::vector<std::string> vec_args;
    auto* reflect_cmd = hh_cmd->add_subcommand("reflect", "apply U_z to v: reflect <z> <v>");
    reflect_cmd->add_option("vectors", vec_args, "generator and vector, e.g. 1,1 2,1")->expected(2)->required();
    auto* between_cmd = hh_cmd->add_subcommand("between", "reflector mapping x to y: between <x> <y>");
    between_cmd->add_option("vectors", vec_args, "two vectors of equal norm")->expected(2)->required();
    auto* ortho_cmd = hh_cmd->add_subcommand("ortho", "Householder orthonormalization (floating point)");
    ortho_cmd->add_option("vectors", vec_args, "linearly independent vectors")->expected(1, 64)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    SweepOptions sweep_opts{src.max_bits, src.jobs};
    try {
        if (*hh_cmd) {
            if (*ortho_cmd) {
                std::vector<Vector<double>> vs;
                for (const auto& a : vec_args) vs.push_back(to_double(parse_vector(a)));
                auto r = orthonormalize(vs);
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    out << "s" << i + 1 << " = " << vs[i] << "\n";
                    out << "  generator z = " << r.reflectors[i].generator() << "\n";
                    out << "  normalized image = " << r.vectors[i] << "\n";
                    out << "  span basis q = " << r.span_basis[i] << "\n";
                }
                return kOk;
            }
            auto a = parse_vector(vec_args.at(0));
            auto b = parse_vector(vec_args.at(1));
            if (a.dim() != b.dim()) throw UsageError("vectors have different dimensions");
            if (*reflect_cmd) {
                auto u = householder_from_vector(a);
                out << "U = " << u.matrix() << "\n";
                out << "U v = " << reflect(u, b) << "\n";
            } else {
                auto u = reflector_between(a, b);
                out << "generator z = " << u.generator() << "\n";
                out << "U = " << u.matrix() << "\n";
                out << "U x = " << reflect(u, a) << "\n";
                out << "U y = " << reflect(u, b) << "\n";
            }
            return kOk;
        }

        Loaded loaded = load(src);
        const ContextHypergraph& h = loaded.graph;

        if (*validate_cmd) {
            report::hypergraph_summary(out, h, loaded.source);
            auto r = validate(h);
            report::validation(out, h, r);
            report::structure(out, h);
            if (!r.ok()) {
                for (const auto& c : r.contexts)
                    if (!c.orthogonal) err << "context " << c.name << " not orthogonal: "
                                           << report::pair_list(h, c.non_orthogonal_pairs) << "\n";
                err << "validation failed\n";
                return kInput;
            }
            return kOk;
        }
        if (*states_cmd) {
            report::states(out, h, enumerate_two_valued_states(h));
            return kOk;
        }
        if (*products_cmd) {
            auto hist = product_sum_histogram(h, sweep_opts);
            report::products(out, h, hist);
            if (!src.csv.empty()) write_file(src.csv, hist.to_csv());
            return kOk;
        }
        if (*additive_cmd) {
            auto hist = additive_histogram(h, sweep_opts);
            std::optional<std::int64_t> total;
            if (h.labeled() && validate(h).ok())
                total = static_cast<std::int64_t>(h.contexts().size() * (h.dim() - 2));
            report::additive(out, h, hist, total);
            if (!src.csv.empty()) write_file(src.csv, hist.to_csv());
            return kOk;
        }
        if (*chromatic_cmd) {
            report::coloring(out, h, vertex_cap);
            return kOk;
        }

        auto scheme = EigenvalueScheme::parse(scheme_text, h.dim());
        if (minus_slot > h.dim()) throw UsageError("--minus-slot exceeds the dimension");
        if (*quantum_cmd) {
            report::quantum(out, predict(h, scheme, minus_slot - 1), minus_slot - 1);
            return kOk;
        }

        // report
        report::hypergraph_summary(out, h, loaded.source);
        auto v = validate(h);
        report::validation(out, h, v);
        if (!v.ok()) {
            err << "validation failed\n";
            return kInput;
        }
        report::structure(out, h);
        report::coloring(out, h, vertex_cap);
        report::states(out, h, enumerate_two_valued_states(h));
        auto prod = product_sum_histogram(h, sweep_opts);
        report::products(out, h, prod);
        std::optional<std::int64_t> total;
        if (h.labeled()) total = static_cast<std::int64_t>(h.contexts().size() * (h.dim() - 2));
        auto add = additive_histogram(h, sweep_opts);
        report::additive(out, h, add, total);
        if (h.labeled()) {
            auto q = predict(h, scheme, minus_slot - 1);
            report::quantum(out, q, minus_slot - 1);
            report::header(out, "quantum versus classical");
            out << "product: quantum " << q.product_prediction << " | classical range [" << prod.min << ", "
                << prod.max << "]\n";
            out << "additive total: quantum " << q.additive_eigenvalue_total << " | classical count "
                << add.count(static_cast<std::int64_t>(q.additive_eigenvalue_total.num())) << "\n";
        }
        if (!src.csv.empty()) {
            write_file(src.csv, prod.to_csv());
            write_file(additive_csv_path(src.csv), add.to_csv());
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemeError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInput;
    }
}

}  // namespace contextlab::cli
