#pragma once

/*
 * Context hypergraphs: observables grouped into d-element contexts, with
 * optional exact vector labels in R^d.
 *
 * Text format (line oriented, '#' starts a comment):
 *
 *     dim <d>
 *     vec <name> <c1> ... <cd>      # labeled observable, "p" or "p/q" components
 *     obs <name>                    # unlabeled observable
 *     ctx <name> <obs1> ... <obsd>
 *
 * A file uses either vec or obs declarations, never both.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "contextlab/linalg.hpp"
#include "contextlab/rational.hpp"

namespace contextlab {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct Context {
    std::string name;
    std::vector<std::size_t> members;  // observable indices, declaration order
};

class ContextHypergraph {
public:
    ContextHypergraph() = default;

    explicit ContextHypergraph(std::size_t dim) : dim_(dim) {
        if (dim == 0) throw std::invalid_argument("hypergraph: dimension must be positive");
    }

    std::size_t add_observable(const std::string& name) {
        if (!labels_.empty()) throw std::invalid_argument("hypergraph: cannot mix labeled and unlabeled observables");
        return insert_name(name);
    }

    std::size_t add_labeled_observable(const std::string& name, Vector<Rational> label) {
        if (!names_.empty() && labels_.empty())
            throw std::invalid_argument("hypergraph: cannot mix labeled and unlabeled observables");
        if (label.dim() != dim_)
            throw DimensionError("hypergraph: vector '" + name + "' has dimension " + std::to_string(label.dim()) +
                                 ", expected " + std::to_string(dim_));
        std::size_t id = insert_name(name);
        labels_.push_back(std::move(label));
        return id;
    }

    void add_context(const std::string& name, const std::vector<std::string>& member_names) {
        std::vector<std::size_t> members;
        members.reserve(member_names.size());
        for (const auto& m : member_names) {
            auto id = find(m);
            if (!id) throw std::invalid_argument("hypergraph: context '" + name + "' names unknown observable '" + m + "'");
            members.push_back(*id);
        }
        add_context(name, std::move(members));
    }

    void add_context(const std::string& name, std::vector<std::size_t> members) {
        if (members.size() != dim_)
            throw std::invalid_argument("hypergraph: context '" + name + "' has " + std::to_string(members.size()) +
                                        " members, expected " + std::to_string(dim_));
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i] >= names_.size()) throw std::out_of_range("hypergraph: observable index out of range");
            for (std::size_t j = 0; j < i; ++j)
                if (members[i] == members[j])
                    throw std::invalid_argument("hypergraph: context '" + name + "' repeats observable '" +
                                                names_[members[i]] + "'");
        }
        for (const auto& c : contexts_)
            if (c.name == name) throw std::invalid_argument("hypergraph: duplicate context name '" + name + "'");
        contexts_.push_back({name, std::move(members)});
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t observable_count() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::string& name(std::size_t id) const { return names_.at(id); }
    [[nodiscard]] const std::vector<Context>& contexts() const { return contexts_; }
    [[nodiscard]] bool labeled() const { return !labels_.empty(); }
    [[nodiscard]] const Vector<Rational>& label(std::size_t id) const { return labels_.at(id); }

    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    [[nodiscard]] std::vector<Vector<Rational>> context_labels(std::size_t context) const {
        if (!labeled()) throw std::logic_error("hypergraph: context labels requested on an unlabeled hypergraph");
        std::vector<Vector<Rational>> out;
        for (auto m : contexts_.at(context).members) out.push_back(labels_[m]);
        return out;
    }

    /// Copy without the context at the given position; observables are kept.
    [[nodiscard]] ContextHypergraph without_context(std::size_t context) const {
        ContextHypergraph copy = *this;
        copy.contexts_.erase(copy.contexts_.begin() + static_cast<std::ptrdiff_t>(context));
        return copy;
    }

    friend bool operator==(const ContextHypergraph& a, const ContextHypergraph& b) {
        if (a.dim_ != b.dim_ || a.names_ != b.names_ || a.contexts_.size() != b.contexts_.size()) return false;
        if (a.labels_.size() != b.labels_.size()) return false;
        for (std::size_t i = 0; i < a.labels_.size(); ++i)
            if (!(a.labels_[i] == b.labels_[i])) return false;
        for (std::size_t i = 0; i < a.contexts_.size(); ++i)
            if (a.contexts_[i].name != b.contexts_[i].name || a.contexts_[i].members != b.contexts_[i].members)
                return false;
        return true;
    }

private:
    std::size_t insert_name(const std::string& name) {
        if (name.empty()) throw std::invalid_argument("hypergraph: empty observable name");
        if (index_.count(name)) throw std::invalid_argument("hypergraph: duplicate observable name '" + name + "'");
        index_.emplace(name, names_.size());
        names_.push_back(name);
        return names_.size() - 1;
    }

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Vector<Rational>> labels_;
    std::vector<Context> contexts_;
};

// ---------------------------------------------------------------------------
// text format

inline ContextHypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<ContextHypergraph> h;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        try {
            const std::string& kw = tok[0];
            if (kw == "dim") {
                if (h) throw ParseError(line_no, "'dim' must appear exactly once, before everything else");
                if (tok.size() != 2) throw ParseError(line_no, "expected 'dim <d>'");
                long long d = 0;
                try {
                    std::size_t used = 0;
                    d = std::stoll(tok[1], &used);
                    if (used != tok[1].size()) d = 0;
                } catch (const std::exception&) {
                    d = 0;
                }
                if (d <= 0) throw ParseError(line_no, "dimension must be a positive integer, got '" + tok[1] + "'");
                h.emplace(static_cast<std::size_t>(d));
                continue;
            }
            if (!h) throw ParseError(line_no, "first directive must be 'dim <d>'");
            if (kw == "vec") {
                if (tok.size() < 2) throw ParseError(line_no, "expected 'vec <name> <components...>'");
                if (tok.size() - 2 != h->dim())
                    throw ParseError(line_no, "vector '" + tok[1] + "' has " + std::to_string(tok.size() - 2) +
                                                  " components, expected " + std::to_string(h->dim()));
                std::vector<Rational> comps;
                for (std::size_t i = 2; i < tok.size(); ++i) comps.push_back(Rational::parse(tok[i]));
                h->add_labeled_observable(tok[1], Vector<Rational>(std::move(comps)));
            } else if (kw == "obs") {
                if (tok.size() != 2) throw ParseError(line_no, "expected 'obs <name>'");
                h->add_observable(tok[1]);
            } else if (kw == "ctx") {
                if (tok.size() < 2) throw ParseError(line_no, "expected 'ctx <name> <members...>'");
                h->add_context(tok[1], std::vector<std::string>(tok.begin() + 2, tok.end()));
            } else {
                throw ParseError(line_no, "unknown directive '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!h) throw ParseError(line_no, "missing 'dim' directive");
    return std::move(*h);
}

inline std::string serialize_hypergraph(const ContextHypergraph& h) {
    std::ostringstream os;
    os << "dim " << h.dim() << "\n";
    for (std::size_t i = 0; i < h.observable_count(); ++i) {
        if (h.labeled()) {
            os << "vec " << h.name(i);
            for (const auto& c : h.label(i).components()) os << ' ' << c;
        } else {
            os << "obs " << h.name(i);
        }
        os << "\n";
    }
    for (const auto& c : h.contexts()) {
        os << "ctx " << c.name;
        for (auto m : c.members) os << ' ' << h.name(m);
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// structural analysis

inline std::vector<std::size_t> occurrence_degrees(const ContextHypergraph& h) {
    std::vector<std::size_t> deg(h.observable_count(), 0);
    for (const auto& c : h.contexts())
        for (auto m : c.members) ++deg[m];
    return deg;
}

/// Every observable occurs in an even, nonzero number of contexts.
inline bool is_even_connected(const ContextHypergraph& h) {
    if (h.observable_count() == 0) return false;
    auto deg = occurrence_degrees(h);
    return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d >= 2 && d % 2 == 0; });
}

/*
 * Parity obstruction: with every observable in an even number of contexts
 * the product of all context products is +1 for any +-1 assignment, so an
 * odd number of contexts cannot all have product -1.
 */
inline bool parity_obstruction(const ContextHypergraph& h) {
    return is_even_connected(h) && h.contexts().size() % 2 == 1;
}

struct ObservablePair {
    std::size_t first;
    std::size_t second;
    friend bool operator==(const ObservablePair&, const ObservablePair&) = default;
};

struct ContextCheck {
    std::string name;
    bool nonzero = true;
    bool orthogonal = true;
    bool complete = true;  // members are linearly independent
    Rational member_determinant;
    std::vector<ObservablePair> non_orthogonal_pairs;
};

struct ValidationReport {
    bool vectors_checked = false;
    std::vector<ContextCheck> contexts;
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> uncovered;  // observables in no context

    [[nodiscard]] bool ok() const {
        if (!uncovered.empty()) return false;
        return std::all_of(contexts.begin(), contexts.end(),
                           [](const ContextCheck& c) { return c.nonzero && c.orthogonal && c.complete; });
    }
};

inline ValidationReport validate(const ContextHypergraph& h) {
    ValidationReport r;
    r.degrees = occurrence_degrees(h);
    for (std::size_t i = 0; i < r.degrees.size(); ++i)
        if (r.degrees[i] == 0) r.uncovered.push_back(i);
    r.vectors_checked = h.labeled();
    for (std::size_t ci = 0; ci < h.contexts().size(); ++ci) {
        const auto& c = h.contexts()[ci];
        ContextCheck check{c.name, true, true, true, Rational(0), {}};
        if (h.labeled()) {
            for (std::size_t i = 0; i < c.members.size(); ++i) {
                if (h.label(c.members[i]).is_zero()) check.nonzero = false;
                for (std::size_t j = i + 1; j < c.members.size(); ++j)
                    if (!orthogonal(h.label(c.members[i]), h.label(c.members[j])))
                        check.non_orthogonal_pairs.push_back({c.members[i], c.members[j]});
            }
            check.orthogonal = check.non_orthogonal_pairs.empty();
            check.member_determinant = determinant(SquareMatrix<Rational>::from_rows(h.context_labels(ci)));
            check.complete = !check.member_determinant.is_zero();
        }
        r.contexts.push_back(std::move(check));
    }
    return r;
}

struct FaithfulnessResult {
    bool faithful = true;
    // orthogonal but never in a common context
    std::vector<ObservablePair> orthogonal_not_cocontextual;
    // share a context but not orthogonal
    std::vector<ObservablePair> cocontextual_not_orthogonal;
};

inline std::vector<std::vector<bool>> cocontextual_matrix(const ContextHypergraph& h) {
    const std::size_t n = h.observable_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& c : h.contexts())
        for (auto a : c.members)
            for (auto b : c.members)
                if (a != b) adj[a][b] = true;
    return adj;
}

/// Pairs share a context exactly when their labels are orthogonal.
inline FaithfulnessResult verify_faithful_representation(const ContextHypergraph& h) {
    if (!h.labeled()) throw std::invalid_argument("faithfulness check needs vector labels");
    auto adj = cocontextual_matrix(h);
    FaithfulnessResult r;
    for (std::size_t a = 0; a < h.observable_count(); ++a)
        for (std::size_t b = a + 1; b < h.observable_count(); ++b) {
            bool orth = orthogonal(h.label(a), h.label(b));
            if (orth && !adj[a][b]) r.orthogonal_not_cocontextual.push_back({a, b});
            if (!orth && adj[a][b]) r.cocontextual_not_orthogonal.push_back({a, b});
        }
    r.faithful = r.orthogonal_not_cocontextual.empty() && r.cocontextual_not_orthogonal.empty();
    return r;
}

// ---------------------------------------------------------------------------
// coloring

struct SimpleGraph {
    std::size_t vertices = 0;
    std::vector<std::vector<bool>> adjacent;

    [[nodiscard]] std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t a = 0; a < vertices; ++a)
            for (std::size_t b = a + 1; b < vertices; ++b) e += adjacent[a][b] ? 1 : 0;
        return e;
    }
};

/// Observables adjacent iff they share a context.
inline SimpleGraph adjacency_graph(const ContextHypergraph& h) {
    return {h.observable_count(), cocontextual_matrix(h)};
}

class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultColoringVertexCap = 30;

struct ColoringResult {
    std::size_t chromatic_number = 0;
    std::size_t clique_lower_bound = 0;
    std::size_t greedy_upper_bound = 0;
    std::vector<std::size_t> coloring;  // optimal, colors 0..k-1
};

namespace detail {

class ColoringSearch {
public:
    explicit ColoringSearch(const SimpleGraph& g) : g_(g), color_(g.vertices, kNone) {}

    std::size_t greedy_clique() const {
        // grow a clique from each vertex in index order, keep the largest
        std::size_t best = g_.vertices ? 1 : 0;
        for (std::size_t s = 0; s < g_.vertices; ++s) {
            std::vector<std::size_t> clique{s};
            for (std::size_t v = 0; v < g_.vertices; ++v) {
                if (v == s) continue;
                if (std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return g_.adjacent[u][v]; }))
                    clique.push_back(v);
            }
            best = std::max(best, clique.size());
        }
        return best;
    }

    std::vector<std::size_t> greedy_coloring() const {
        std::vector<std::size_t> col(g_.vertices, kNone);
        for (std::size_t v = 0; v < g_.vertices; ++v) {
            std::vector<bool> used(g_.vertices + 1, false);
            for (std::size_t u = 0; u < g_.vertices; ++u)
                if (g_.adjacent[v][u] && col[u] != kNone) used[col[u]] = true;
            std::size_t c = 0;
            while (used[c]) ++c;
            col[v] = c;
        }
        return col;
    }

    ColoringResult run() {
        ColoringResult r;
        if (g_.vertices == 0) return r;
        r.clique_lower_bound = greedy_clique();
        best_ = greedy_coloring();
        best_k_ = *std::max_element(best_.begin(), best_.end()) + 1;
        r.greedy_upper_bound = best_k_;
        lower_ = r.clique_lower_bound;
        if (best_k_ > lower_) search(0, 0);
        r.chromatic_number = best_k_;
        r.coloring = best_;
        return r;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    // DSATUR branching: most saturated uncolored vertex first
    std::size_t pick_vertex() const {
        std::size_t pick = kNone, best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < g_.vertices; ++v) {
            if (color_[v] != kNone) continue;
            std::vector<bool> seen(g_.vertices, false);
            std::size_t sat = 0, deg = 0;
            for (std::size_t u = 0; u < g_.vertices; ++u) {
                if (!g_.adjacent[v][u]) continue;
                if (color_[u] == kNone) {
                    ++deg;
                } else if (!seen[color_[u]]) {
                    seen[color_[u]] = true;
                    ++sat;
                }
            }
            if (pick == kNone || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return pick;
    }

    void search(std::size_t colored, std::size_t used_colors) {
        if (best_k_ == lower_) return;
        if (colored == g_.vertices) {
            if (used_colors < best_k_) {
                best_k_ = used_colors;
                best_ = color_;
            }
            return;
        }
        std::size_t v = pick_vertex();
        // colors 0..used_colors-1, plus one fresh color (symmetry breaking)
        for (std::size_t c = 0; c <= used_colors && c + 1 < best_k_; ++c) {
            bool clash = false;
            for (std::size_t u = 0; u < g_.vertices && !clash; ++u) clash = g_.adjacent[v][u] && color_[u] == c;
            if (clash) continue;
            color_[v] = c;
            search(colored + 1, std::max(used_colors, c + 1));
            color_[v] = kNone;
            if (best_k_ == lower_) return;
        }
    }

    const SimpleGraph& g_;
    std::vector<std::size_t> color_;
    std::vector<std::size_t> best_;
    std::size_t best_k_ = 0;
    std::size_t lower_ = 0;
};

}  // namespace detail

/// Exact chromatic number by branch and bound (clique lower bound, greedy upper bound).
inline ColoringResult chromatic_number(const SimpleGraph& g, std::size_t vertex_cap = kDefaultColoringVertexCap) {
    if (g.vertices > vertex_cap)
        throw BudgetError("coloring: " + std::to_string(g.vertices) + " vertices exceeds cap of " +
                          std::to_string(vertex_cap));
    return detail::ColoringSearch(g).run();
}

// ---------------------------------------------------------------------------
// presets

namespace detail {

inline Vector<Rational> ints(std::initializer_list<int> xs) {
    std::vector<Rational> v;
    for (int x : xs) v.emplace_back(x);
    return Vector<Rational>(std::move(v));
}

inline ContextHypergraph preset_ceg18() {
    // Cabello / Estebaranz / Garcia-Alcaine configuration in R^4
    ContextHypergraph h(4);
    const std::initializer_list<int> vecs[18] = {
        {0, 0, 1, -1}, {1, -1, 0, 0}, {1, 1, -1, -1}, {1, 1, 1, 1},  {1, -1, 1, -1}, {1, 0, -1, 0},
        {0, 1, 0, -1}, {1, 0, 1, 0},  {1, 1, -1, 1},  {-1, 1, 1, 1}, {1, 1, 1, -1},  {1, 0, 0, 1},
        {0, 1, -1, 0}, {0, 1, 1, 0},  {0, 0, 0, 1},   {1, 0, 0, 0},  {0, 1, 0, 0},   {0, 0, 1, 1},
    };
    for (int i = 0; i < 18; ++i) h.add_labeled_observable("a" + std::to_string(i + 1), ints(vecs[i]));
    const std::vector<std::vector<int>> ctx = {
        {1, 2, 3, 4},    {4, 5, 6, 7},     {7, 8, 9, 10},   {10, 11, 12, 13}, {13, 14, 15, 16},
        {16, 17, 18, 1}, {2, 9, 11, 18},   {3, 5, 12, 14},  {6, 8, 15, 17},
    };
    for (std::size_t j = 0; j < ctx.size(); ++j) {
        std::vector<std::size_t> members;
        for (int m : ctx[j]) members.push_back(static_cast<std::size_t>(m - 1));
        h.add_context("C" + std::to_string(j + 1), members);
    }
    return h;
}

inline ContextHypergraph preset_standard(std::size_t d) {
    ContextHypergraph h(d);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> e(d, Rational(0));
        e[i] = Rational(1);
        members.push_back(h.add_labeled_observable("e" + std::to_string(i + 1), Vector<Rational>(e)));
    }
    h.add_context("C1", members);
    return h;
}

inline ContextHypergraph preset_fork3() {
    // two triads sharing one observable
    ContextHypergraph h(3);
    h.add_labeled_observable("a", ints({1, 0, 0}));
    h.add_labeled_observable("b", ints({0, 1, 0}));
    h.add_labeled_observable("c", ints({0, 0, 1}));
    h.add_labeled_observable("d", ints({0, 1, 1}));
    h.add_labeled_observable("e", ints({0, 1, -1}));
    h.add_context("C1", std::vector<std::string>{"a", "b", "c"});
    h.add_context("C2", std::vector<std::string>{"a", "d", "e"});
    return h;
}

}  // namespace detail

inline std::vector<std::string> preset_names() { return {"ceg18", "fork3", "std2", "std3", "std4"}; }

inline ContextHypergraph preset(std::string_view name) {
    if (name == "ceg18") return detail::preset_ceg18();
    if (name == "fork3") return detail::preset_fork3();
    if (name == "std2") return detail::preset_standard(2);
    if (name == "std3") return detail::preset_standard(3);
    if (name == "std4") return detail::preset_standard(4);
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace contextlab
