#pragma once

// Plain-text report sections. Output is a pure function of the inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "contextlab/enumeration.hpp"
#include "contextlab/hypergraph.hpp"
#include "contextlab/quantum.hpp"

namespace contextlab::report {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string observable_list(const ContextHypergraph& h, std::uint64_t bits) {
    std::string s;
    for (std::size_t i = 0; i < h.observable_count(); ++i)
        if (bits >> i & 1U) s += (s.empty() ? "" : " ") + h.name(i);
    return s.empty() ? "none" : s;
}

inline std::string pair_list(const ContextHypergraph& h, const std::vector<ObservablePair>& pairs) {
    if (pairs.empty()) return "none";
    std::string s;
    for (const auto& p : pairs) s += (s.empty() ? "" : " ") + h.name(p.first) + "-" + h.name(p.second);
    return s;
}

inline void header(std::ostream& os, const std::string& title) { os << "== " << title << " ==\n"; }

inline void hypergraph_summary(std::ostream& os, const ContextHypergraph& h, const std::string& source) {
    header(os, "hypergraph");
    os << "source: " << source << "\n";
    os << "dimension: " << h.dim() << "\n";
    os << "observables: " << h.observable_count() << "\n";
    os << "contexts: " << h.contexts().size() << "\n";
    os << "labeled: " << yes_no(h.labeled()) << "\n";
}

inline void validation(std::ostream& os, const ContextHypergraph& h, const ValidationReport& r) {
    header(os, "validation");
    for (std::size_t ci = 0; ci < r.contexts.size(); ++ci) {
        const auto& c = r.contexts[ci];
        os << c.name << ":";
        for (auto m : h.contexts()[ci].members) os << ' ' << h.name(m);
        if (r.vectors_checked) {
            os << " | nonzero " << yes_no(c.nonzero) << " | orthogonal " << yes_no(c.orthogonal) << " | complete "
               << yes_no(c.complete) << " (det " << c.member_determinant << ")";
            if (!c.orthogonal) os << " | non-orthogonal pairs: " << pair_list(h, c.non_orthogonal_pairs);
        }
        os << "\n";
    }
    if (!r.vectors_checked) os << "vector checks: skipped (unlabeled)\n";
    os << "occurrences:";
    for (std::size_t i = 0; i < r.degrees.size(); ++i) os << ' ' << h.name(i) << '=' << r.degrees[i];
    os << "\n";
    os << "uncovered observables:";
    if (r.uncovered.empty()) os << " none";
    for (auto i : r.uncovered) os << ' ' << h.name(i);
    os << "\n";
    os << "status: " << (r.ok() ? "ok" : "FAILED") << "\n";
}

inline void structure(std::ostream& os, const ContextHypergraph& h) {
    header(os, "structure");
    os << "even-connected: " << yes_no(is_even_connected(h)) << "\n";
    os << "parity obstruction: " << yes_no(parity_obstruction(h)) << "\n";
    if (h.labeled()) {
        auto f = verify_faithful_representation(h);
        os << "faithful orthogonal representation: " << yes_no(f.faithful) << "\n";
        os << "orthogonal but not co-contextual: " << pair_list(h, f.orthogonal_not_cocontextual) << "\n";
        os << "co-contextual but not orthogonal: " << pair_list(h, f.cocontextual_not_orthogonal) << "\n";
    } else {
        os << "faithful orthogonal representation: skipped (unlabeled)\n";
    }
}

inline void coloring(std::ostream& os, const ContextHypergraph& h, std::size_t vertex_cap) {
    header(os, "coloring");
    auto g = adjacency_graph(h);
    os << "adjacency edges: " << g.edge_count() << "\n";
    auto c = chromatic_number(g, vertex_cap);
    os << "clique lower bound: " << c.clique_lower_bound << "\n";
    os << "greedy upper bound: " << c.greedy_upper_bound << "\n";
    os << "chromatic number: " << c.chromatic_number << "\n";
    os << "coloring:";
    for (std::size_t v = 0; v < c.coloring.size(); ++v) os << ' ' << h.name(v) << '=' << c.coloring[v];
    os << "\n";
}

inline void states(std::ostream& os, const ContextHypergraph& h, const std::vector<TwoValuedState>& s) {
    header(os, "two-valued states");
    os << "count: " << s.size() << "\n";
    for (std::size_t i = 0; i < s.size(); ++i) os << "state " << i + 1 << ": " << observable_list(h, s[i].ones) << "\n";
}

inline void histogram_lines(std::ostream& os, const ContextHypergraph& h, const SumHistogram& hist) {
    os << "assignments: " << hist.total << "\n";
    os << "min: " << hist.min << " (count " << hist.count(hist.min)
       << ", lowest witness -1 at: " << observable_list(h, hist.min_witness) << ")\n";
    os << "max: " << hist.max << " (count " << hist.count(hist.max)
       << ", lowest witness -1 at: " << observable_list(h, hist.max_witness) << ")\n";
    os << "histogram:";
    for (const auto& [k, v] : hist.counts) os << ' ' << k << ':' << v;
    os << "\n";
}

inline void products(std::ostream& os, const ContextHypergraph& h, const SumHistogram& hist) {
    header(os, "product sums");
    histogram_lines(os, h, hist);
    const auto n = static_cast<std::int64_t>(h.contexts().size());
    os << "all contexts -1 (sum " << -n << ") reachable: " << yes_no(hist.count(-n) > 0) << "\n";
}

inline void additive(std::ostream& os, const ContextHypergraph& h, const SumHistogram& hist,
                     std::optional<std::int64_t> quantum_total) {
    header(os, "additive sums");
    histogram_lines(os, h, hist);
    if (quantum_total)
        os << "quantum eigenvalue total " << *quantum_total << " reachable: " << yes_no(hist.count(*quantum_total) > 0)
           << "\n";
}

inline void quantum(std::ostream& os, const QuantumPrediction& q, std::size_t minus_slot) {
    header(os, "quantum predictions");
    os << "scheme: " << q.scheme << "\n";
    os << "minus slot: " << minus_slot + 1 << "\n";
    os << "householder context products equal -1: " << yes_no(q.householder_products_minus_identity) << "\n";
    for (const auto& c : q.contexts)
        os << c.context << ": det " << c.determinant << " | <S_C> " << c.sum_expectation << "\n";
    os << "product prediction: " << q.product_prediction << "\n";
    os << "additive eigenvalue total: " << q.additive_eigenvalue_total << "\n";
    os << "additive prediction (maximally mixed): " << q.additive_prediction << "\n";
}

}  // namespace contextlab::report
