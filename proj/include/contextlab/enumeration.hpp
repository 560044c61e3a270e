#pragma once

/*
 * Exhaustive classical value assignments on a context hypergraph.
 *
 * A +-1 assignment is a bitmask over observables: bit i set means a_i = -1.
 * Context masks are precomputed so the product over a context is the
 * parity of popcount(assignment & mask).
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "contextlab/hypergraph.hpp"

namespace contextlab {

struct PmAssignment {
    std::uint64_t bits = 0;

    [[nodiscard]] int value(std::size_t observable) const { return (bits >> observable) & 1U ? -1 : 1; }
    friend bool operator==(const PmAssignment&, const PmAssignment&) = default;
};

inline PmAssignment assignment_from_minus_ones(const std::vector<std::size_t>& minus_ones) {
    PmAssignment a;
    for (auto i : minus_ones) a.bits |= std::uint64_t{1} << i;
    return a;
}

inline constexpr std::size_t kMaxObservables = 63;
inline constexpr std::size_t kDefaultSweepBits = 24;

inline std::vector<std::uint64_t> context_masks(const ContextHypergraph& h) {
    if (h.observable_count() > kMaxObservables)
        throw BudgetError("assignments: more than " + std::to_string(kMaxObservables) + " observables");
    std::vector<std::uint64_t> masks;
    masks.reserve(h.contexts().size());
    for (const auto& c : h.contexts()) {
        std::uint64_t m = 0;
        for (auto i : c.members) m |= std::uint64_t{1} << i;
        masks.push_back(m);
    }
    return masks;
}

/// Sum over contexts of the product of member values.
inline std::int64_t product_sum(std::uint64_t bits, const std::vector<std::uint64_t>& masks) {
    std::int64_t s = 0;
    for (auto m : masks) s += (std::popcount(bits & m) & 1) ? -1 : 1;
    return s;
}

inline std::int64_t product_sum(const PmAssignment& a, const ContextHypergraph& h) {
    return product_sum(a.bits, context_masks(h));
}

/// Sum over contexts of the sum of member values.
inline std::int64_t additive_sum(std::uint64_t bits, const std::vector<std::uint64_t>& masks) {
    std::int64_t s = 0;
    for (auto m : masks) s += std::popcount(m) - 2 * std::popcount(bits & m);
    return s;
}

inline std::int64_t additive_sum(const PmAssignment& a, const ContextHypergraph& h) {
    return additive_sum(a.bits, context_masks(h));
}

// ---------------------------------------------------------------------------
// histograms

struct SumHistogram {
    std::map<std::int64_t, std::uint64_t> counts;
    std::uint64_t total = 0;
    // lowest bitmask reaching each extremum
    std::int64_t min = 0;
    std::int64_t max = 0;
    std::uint64_t min_witness = 0;
    std::uint64_t max_witness = 0;

    [[nodiscard]] std::uint64_t count(std::int64_t sum) const {
        auto it = counts.find(sum);
        return it == counts.end() ? 0 : it->second;
    }

    void add(std::int64_t sum, std::uint64_t bits) {
        if (total == 0 || sum < min || (sum == min && bits < min_witness)) {
            min = sum;
            min_witness = bits;
        }
        if (total == 0 || sum > max || (sum == max && bits < max_witness)) {
            max = sum;
            max_witness = bits;
        }
        ++counts[sum];
        ++total;
    }

    /// Associative merge of a histogram over a disjoint range.
    void merge(const SumHistogram& other) {
        if (other.total == 0) return;
        if (total == 0) {
            *this = other;
            return;
        }
        if (other.min < min || (other.min == min && other.min_witness < min_witness)) {
            min = other.min;
            min_witness = other.min_witness;
        }
        if (other.max > max || (other.max == max && other.max_witness < max_witness)) {
            max = other.max;
            max_witness = other.max_witness;
        }
        for (const auto& [k, v] : other.counts) counts[k] += v;
        total += other.total;
    }

    [[nodiscard]] std::string to_csv() const {
        std::ostringstream os;
        os << "sum,count\n";
        for (const auto& [k, v] : counts) os << k << ',' << v << '\n';
        return os.str();
    }
};

struct SweepOptions {
    std::size_t max_bits = kDefaultSweepBits;
    std::size_t jobs = 1;
};

/*
 * Runs fn(bits) over every assignment 0 .. 2^N - 1. The counter range is
 * split into contiguous chunks, one per job, and partial histograms are
 * merged in chunk order, so the result does not depend on the job count.
 */
template <typename SumFn>
SumHistogram sweep(const ContextHypergraph& h, const SweepOptions& opts, SumFn fn) {
    const std::size_t n = h.observable_count();
    if (n > opts.max_bits)
        throw BudgetError("sweep: 2^" + std::to_string(n) + " assignments exceeds budget of 2^" +
                          std::to_string(opts.max_bits));
    if (n > kMaxObservables) throw BudgetError("sweep: too many observables");
    const std::uint64_t end = std::uint64_t{1} << n;
    const std::size_t jobs = std::max<std::size_t>(1, std::min<std::uint64_t>(opts.jobs, end));

    std::vector<SumHistogram> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    auto work = [&](std::size_t part) {
        std::uint64_t lo = end / jobs * part + std::min<std::uint64_t>(part, end % jobs);
        std::uint64_t hi = lo + end / jobs + (part < end % jobs ? 1 : 0);
        SumHistogram& hist = parts[part];
        try {
            for (std::uint64_t bits = lo; bits < hi; ++bits) hist.add(fn(bits), bits);
        } catch (...) {
            errors[part] = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (std::size_t p = 0; p < jobs; ++p) threads.emplace_back(work, p);
        for (auto& t : threads) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    SumHistogram result;
    for (const auto& p : parts) result.merge(p);
    return result;
}

inline SumHistogram product_sum_histogram(const ContextHypergraph& h, const SweepOptions& opts = {}) {
    auto masks = context_masks(h);
    return sweep(h, opts, [&](std::uint64_t bits) { return product_sum(bits, masks); });
}

/*
 * For a hypergraph where every observable sits in exactly two contexts the
 * additive sum is 2 * sum_i a_i; that identity is checked for every
 * assignment of the sweep.
 */
inline SumHistogram additive_histogram(const ContextHypergraph& h, const SweepOptions& opts = {}) {
    auto masks = context_masks(h);
    auto deg = occurrence_degrees(h);
    const bool biconnected =
        !deg.empty() && std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; });
    const auto n = static_cast<std::int64_t>(h.observable_count());
    return sweep(h, opts, [&](std::uint64_t bits) {
        std::int64_t s = additive_sum(bits, masks);
        if (biconnected && s != 2 * (n - 2 * std::popcount(bits)))
            throw std::logic_error("additive sum differs from twice the observable total");
        return s;
    });
}

// ---------------------------------------------------------------------------
// two-valued {0,1} states

struct TwoValuedState {
    std::uint64_t ones = 0;            // observables valued 1
    std::vector<std::size_t> chosen;  // the 1-valued member of each context
    friend bool operator==(const TwoValuedState&, const TwoValuedState&) = default;
};

namespace detail {

class TwoValuedSearch {
public:
    explicit TwoValuedSearch(const ContextHypergraph& h) : h_(h), value_(h.observable_count(), kUnset) {
        containing_.resize(h.observable_count());
        for (std::size_t c = 0; c < h.contexts().size(); ++c)
            for (auto m : h.contexts()[c].members) containing_[m].push_back(c);
    }

    std::vector<TwoValuedState> run() {
        search();
        std::sort(states_.begin(), states_.end(),
                  [](const TwoValuedState& a, const TwoValuedState& b) { return a.ones < b.ones; });
        return std::move(states_);
    }

private:
    static constexpr int kUnset = -1;

    // sets v = 1, forces its context partners to 0; false on conflict
    bool choose(std::size_t v, std::vector<std::size_t>& trail) {
        if (value_[v] == 0) return false;
        if (value_[v] == kUnset) {
            value_[v] = 1;
            trail.push_back(v);
        }
        for (auto c : containing_[v])
            for (auto m : h_.contexts()[c].members) {
                if (m == v) continue;
                if (value_[m] == 1) return false;
                if (value_[m] == kUnset) {
                    value_[m] = 0;
                    trail.push_back(m);
                }
            }
        return true;
    }

    void undo(std::vector<std::size_t>& trail) {
        for (auto v : trail) value_[v] = kUnset;
        trail.clear();
    }

    void search() {
        // most constrained unsatisfied context first
        std::size_t pick = h_.contexts().size(), fewest = 0;
        for (std::size_t c = 0; c < h_.contexts().size(); ++c) {
            std::size_t open = 0;
            bool satisfied = false;
            for (auto m : h_.contexts()[c].members) {
                if (value_[m] == 1) satisfied = true;
                if (value_[m] == kUnset) ++open;
            }
            if (satisfied) continue;
            if (open == 0) return;  // all members 0
            if (pick == h_.contexts().size() || open < fewest) {
                pick = c;
                fewest = open;
            }
        }
        if (pick == h_.contexts().size()) {
            record();
            return;
        }
        for (auto m : h_.contexts()[pick].members) {
            if (value_[m] != kUnset) continue;
            std::vector<std::size_t> trail;
            if (choose(m, trail)) search();
            undo(trail);
        }
    }

    void record() {
        TwoValuedState s;
        for (std::size_t v = 0; v < value_.size(); ++v)
            if (value_[v] == 1) s.ones |= std::uint64_t{1} << v;
        for (const auto& c : h_.contexts())
            for (auto m : c.members)
                if (value_[m] == 1) s.chosen.push_back(m);
        states_.push_back(std::move(s));
    }

    const ContextHypergraph& h_;
    std::vector<int> value_;
    std::vector<std::vector<std::size_t>> containing_;
    std::vector<TwoValuedState> states_;
};

}  // namespace detail

/*
 * All noncontextual {0,1} states with exactly one 1 per context, sorted by
 * the bitmask of 1-valued observables. Observables in no context are 0.
 */
inline std::vector<TwoValuedState> enumerate_two_valued_states(const ContextHypergraph& h) {
    if (h.observable_count() > kMaxObservables) throw BudgetError("two-valued states: too many observables");
    return detail::TwoValuedSearch(h).run();
}

/// The 1-valued observable of every context maps to -1, the rest to +1.
inline PmAssignment pm_from_two_valued(const TwoValuedState& s) { return PmAssignment{s.ones}; }

/// E_a(p) = a (2p - 1)
inline double probability_to_expectation(double p, double a) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability_to_expectation: p outside [0,1]");
    if (!(a > 0.0)) throw std::domain_error("probability_to_expectation: scale must be positive");
    return a * (2.0 * p - 1.0);
}

}  // namespace contextlab
