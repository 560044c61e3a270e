#pragma once

/*
 * Spectral-sum operators sum_i mu_i F_i over a context basis, expectations
 * under exact density matrices, and the quantum predictions for the
 * multiplicative and additive context functionals.
 *
 * Predictions are computed twice, once from exact operator arithmetic
 * (products, determinants, traces) and once from the eigenvalue lists,
 * and the two must agree.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contextlab/hypergraph.hpp"
#include "contextlab/linalg.hpp"
#include "contextlab/rational.hpp"

namespace contextlab {

class SchemeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// Eigenvalue assignment to the d slots of a context.
class EigenvalueScheme {
public:
    enum class Kind { householder, projector, primes, custom };

    static EigenvalueScheme householder(std::size_t d) {
        std::vector<Rational> mu(d, Rational(1));
        if (d) mu[0] = Rational(-1);
        return {Kind::householder, std::move(mu)};
    }

    static EigenvalueScheme projector(std::size_t d) {
        std::vector<Rational> lambda(d, Rational(0));
        if (d) lambda[0] = Rational(1);
        return {Kind::projector, std::move(lambda)};
    }

    static EigenvalueScheme primes(const std::vector<std::int64_t>& ps) {
        std::vector<Rational> mu;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            if (!is_prime(ps[i])) throw SchemeError("primes scheme: " + std::to_string(ps[i]) + " is not prime");
            for (std::size_t j = 0; j < i; ++j)
                if (ps[i] == ps[j]) throw SchemeError("primes scheme: repeated prime " + std::to_string(ps[i]));
            mu.emplace_back(ps[i]);
        }
        return {Kind::primes, std::move(mu)};
    }

    static EigenvalueScheme custom(std::vector<Rational> values) { return {Kind::custom, std::move(values)}; }

    /*
     * "householder", "projector", "primes:2,3,5,7", "custom:-1,-1,1,1".
     * The first two take their length from d; the listed kinds must have d entries.
     */
    static EigenvalueScheme parse(std::string_view text, std::size_t d) {
        if (text == "householder") return householder(d);
        if (text == "projector") return projector(d);
        auto colon = text.find(':');
        if (colon == std::string_view::npos) throw SchemeError("unknown scheme '" + std::string(text) + "'");
        auto kind = text.substr(0, colon);
        std::vector<std::string> items;
        std::stringstream ss{std::string(text.substr(colon + 1))};
        for (std::string item; std::getline(ss, item, ',');) items.push_back(item);
        EigenvalueScheme s;
        try {
            if (kind == "primes") {
                std::vector<std::int64_t> ps;
                for (const auto& it : items) {
                    Rational r = Rational::parse(it);
                    if (!r.is_integer()) throw SchemeError("primes scheme: '" + it + "' is not an integer");
                    ps.push_back(static_cast<std::int64_t>(r.num()));
                }
                s = primes(ps);
            } else if (kind == "custom") {
                std::vector<Rational> mu;
                for (const auto& it : items) mu.push_back(Rational::parse(it));
                s = custom(std::move(mu));
            } else {
                throw SchemeError("unknown scheme kind '" + std::string(kind) + "'");
            }
        } catch (const SchemeError&) {
            throw;
        } catch (const std::exception& e) {
            throw SchemeError(std::string("scheme '") + std::string(text) + "': " + e.what());
        }
        if (s.size() != d)
            throw SchemeError("scheme '" + std::string(text) + "' has " + std::to_string(s.size()) +
                              " eigenvalues, expected " + std::to_string(d));
        return s;
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    [[nodiscard]] Rational product() const {
        Rational p(1);
        for (const auto& v : values_) p *= v;
        return p;
    }

    [[nodiscard]] Rational sum() const {
        Rational s(0);
        for (const auto& v : values_) s += v;
        return s;
    }

    [[nodiscard]] std::string to_string() const {
        switch (kind_) {
            case Kind::householder: return "householder";
            case Kind::projector: return "projector";
            case Kind::primes: return "primes:" + join();
            case Kind::custom: return "custom:" + join();
        }
        return {};
    }

private:
    EigenvalueScheme() = default;
    EigenvalueScheme(Kind k, std::vector<Rational> v) : kind_(k), values_(std::move(v)) {}

    [[nodiscard]] std::string join() const {
        std::string s;
        for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + values_[i].to_string();
        return s;
    }

    Kind kind_ = Kind::custom;
    std::vector<Rational> values_;
};

/// Context basis with one eigenvalue per basis position.
class SpectralObservable {
public:
    SpectralObservable(std::vector<Vector<Rational>> basis, std::vector<Rational> eigenvalues)
        : basis_(std::move(basis)), eigenvalues_(std::move(eigenvalues)) {
        if (basis_.empty()) throw std::invalid_argument("spectral observable: empty basis");
        if (basis_.size() != eigenvalues_.size())
            throw std::invalid_argument("spectral observable: " + std::to_string(basis_.size()) + " vectors but " +
                                        std::to_string(eigenvalues_.size()) + " eigenvalues");
        const std::size_t n = basis_.front().dim();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (basis_[i].dim() != n) throw DimensionError("spectral observable: mixed dimensions");
            if (basis_[i].is_zero()) throw ZeroVectorError("spectral observable: zero basis vector");
            for (std::size_t j = 0; j < i; ++j)
                if (!orthogonal(basis_[i], basis_[j]))
                    throw OrthogonalityError("spectral observable: basis vectors " + std::to_string(j) + " and " +
                                             std::to_string(i) + " are not orthogonal");
        }
    }

    SpectralObservable(std::vector<Vector<Rational>> basis, const EigenvalueScheme& scheme)
        : SpectralObservable(std::move(basis), scheme.values()) {}

    [[nodiscard]] const std::vector<Vector<Rational>>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }
    [[nodiscard]] std::size_t dim() const { return basis_.front().dim(); }
    [[nodiscard]] bool complete() const { return basis_.size() == dim(); }

private:
    std::vector<Vector<Rational>> basis_;
    std::vector<Rational> eigenvalues_;
};

/// sum_i mu_i F_i
inline SquareMatrix<Rational> spectral_operator(const SpectralObservable& s) {
    SquareMatrix<Rational> m(s.dim());
    for (std::size_t i = 0; i < s.basis().size(); ++i)
        m = m + s.eigenvalues()[i] * projector_from_vector(s.basis()[i]).matrix();
    return m;
}

class DensityMatrix {
public:
    /// Checks symmetry, unit trace and positive semidefiniteness (all principal minors).
    explicit DensityMatrix(SquareMatrix<Rational> m) : matrix_(std::move(m)) {
        if (!matrix_.is_symmetric()) throw std::invalid_argument("density matrix: not symmetric");
        if (matrix_.trace() != Rational(1))
            throw std::invalid_argument("density matrix: trace is " + matrix_.trace().to_string() + ", not 1");
        const std::size_t n = matrix_.dim();
        if (n > 16) throw std::invalid_argument("density matrix: principal-minor check limited to n <= 16");
        for (std::uint32_t subset = 1; subset < (1U << n); ++subset) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (subset >> i & 1U) idx.push_back(i);
            SquareMatrix<Rational> minor(idx.size());
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = 0; b < idx.size(); ++b) minor(a, b) = matrix_(idx[a], idx[b]);
            if (determinant(minor).sign() < 0) throw std::invalid_argument("density matrix: not positive semidefinite");
        }
    }

    [[nodiscard]] const SquareMatrix<Rational>& matrix() const { return matrix_; }
    [[nodiscard]] std::size_t dim() const { return matrix_.dim(); }

private:
    SquareMatrix<Rational> matrix_;
};

/// rho = 1/n
inline DensityMatrix maximally_mixed(std::size_t n) {
    if (n == 0) throw std::invalid_argument("maximally_mixed: dimension must be positive");
    return DensityMatrix(Rational(int128{1}, static_cast<int128>(n)) * SquareMatrix<Rational>::identity(n));
}

/// Tr(A rho)
inline Rational expectation(const SquareMatrix<Rational>& a, const DensityMatrix& rho) {
    if (a.dim() != rho.dim()) throw DimensionError("expectation: dimension mismatch");
    return (a * rho.matrix()).trace();
}

// ---------------------------------------------------------------------------
// per-context operators

inline void require_complete_context(const ContextHypergraph& h, std::size_t context) {
    if (!h.labeled()) throw std::invalid_argument("context operator: hypergraph has no vector labels");
    if (context >= h.contexts().size()) throw std::out_of_range("context operator: no such context");
    auto basis = h.context_labels(context);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!orthogonal(basis[i], basis[j]))
                throw OrthogonalityError("context '" + h.contexts()[context].name + "': " +
                                         h.name(h.contexts()[context].members[j]) + " and " +
                                         h.name(h.contexts()[context].members[i]) + " are not orthogonal");
    if (basis.size() != h.dim())
        throw std::invalid_argument("context '" + h.contexts()[context].name + "' is not a complete basis");
}

/// Product of the Householder reflectors of a context's vectors; -1 for a complete context.
inline SquareMatrix<Rational> context_product_operator(const ContextHypergraph& h, std::size_t context) {
    require_complete_context(h, context);
    return contextlab::context_product(h.context_labels(context)).matrix;
}

/// S_C = sum_i s_i F_i with s = -1 at minus_slot and +1 elsewhere.
inline SquareMatrix<Rational> context_sum_operator(const ContextHypergraph& h, std::size_t context,
                                                   std::size_t minus_slot = 0) {
    require_complete_context(h, context);
    if (minus_slot >= h.dim())
        throw std::out_of_range("context sum: minus slot " + std::to_string(minus_slot) + " out of range");
    std::vector<Rational> signs(h.dim(), Rational(1));
    signs[minus_slot] = Rational(-1);
    return spectral_operator(SpectralObservable(h.context_labels(context), signs));
}

struct ContextPrediction {
    std::string context;
    Rational determinant;     // det of the spectral operator
    Rational sum_expectation;  // <S_C> under the maximally mixed state
};

struct QuantumPrediction {
    std::string scheme;
    std::vector<ContextPrediction> contexts;
    Rational product_prediction;   // sum over contexts of the context product value
    Rational additive_prediction;  // sum over contexts of <S_C>
    Rational additive_eigenvalue_total;  // sum over contexts of Tr(S_C)
    bool householder_products_minus_identity = false;
};

/*
 * Sum over contexts of the product of the scheme's eigenvalues. The
 * operator route takes det of the spectral operator per context, the
 * scalar route multiplies the eigenvalue list; both must agree.
 */
inline Rational quantum_product_prediction(const ContextHypergraph& h, const EigenvalueScheme& scheme) {
    if (scheme.size() != h.dim())
        throw SchemeError("scheme has " + std::to_string(scheme.size()) + " eigenvalues, expected " +
                          std::to_string(h.dim()));
    Rational by_operator(0);
    for (std::size_t c = 0; c < h.contexts().size(); ++c) {
        require_complete_context(h, c);
        by_operator += determinant(spectral_operator(SpectralObservable(h.context_labels(c), scheme)));
    }
    Rational by_scalar = Rational(static_cast<std::int64_t>(h.contexts().size())) * scheme.product();
    if (by_operator != by_scalar)
        throw std::logic_error("product prediction: operator route " + by_operator.to_string() +
                               " disagrees with eigenvalue route " + by_scalar.to_string());
    return by_scalar;
}

/// sum_j <S_{C_j}> under rho = 1/d, cross-checked against #contexts * (d - 2) / d.
inline Rational additive_prediction(const ContextHypergraph& h, std::size_t minus_slot = 0) {
    auto rho = maximally_mixed(h.dim());
    Rational by_operator(0);
    for (std::size_t c = 0; c < h.contexts().size(); ++c)
        by_operator += expectation(context_sum_operator(h, c, minus_slot), rho);
    const auto d = static_cast<std::int64_t>(h.dim());
    Rational by_scalar = Rational(static_cast<std::int64_t>(h.contexts().size())) * Rational(int128{d - 2}, int128{d});
    if (by_operator != by_scalar)
        throw std::logic_error("additive prediction: operator route " + by_operator.to_string() +
                               " disagrees with eigenvalue route " + by_scalar.to_string());
    return by_scalar;
}

inline QuantumPrediction predict(const ContextHypergraph& h, const EigenvalueScheme& scheme,
                                 std::size_t minus_slot = 0) {
    QuantumPrediction q;
    q.scheme = scheme.to_string();
    auto rho = maximally_mixed(h.dim());
    const auto minus_identity = -SquareMatrix<Rational>::identity(h.dim());
    q.householder_products_minus_identity = true;
    for (std::size_t c = 0; c < h.contexts().size(); ++c) {
        ContextPrediction cp;
        cp.context = h.contexts()[c].name;
        cp.determinant = determinant(spectral_operator(SpectralObservable(h.context_labels(c), scheme)));
        auto s = context_sum_operator(h, c, minus_slot);
        cp.sum_expectation = expectation(s, rho);
        q.additive_eigenvalue_total += s.trace();
        if (!(context_product_operator(h, c) == minus_identity)) q.householder_products_minus_identity = false;
        q.contexts.push_back(std::move(cp));
    }
    q.product_prediction = quantum_product_prediction(h, scheme);
    q.additive_prediction = additive_prediction(h, minus_slot);
    return q;
}

/// Recovers the multiset of scheme primes whose product is the input, ascending.
inline std::vector<std::int64_t> prime_product_decompose(std::int64_t product, const EigenvalueScheme& scheme) {
    if (scheme.kind() != EigenvalueScheme::Kind::primes)
        throw SchemeError("prime decomposition needs a primes scheme");
    if (product <= 0) throw std::invalid_argument("prime decomposition: product must be positive");
    std::vector<std::int64_t> primes;
    for (const auto& v : scheme.values()) primes.push_back(static_cast<std::int64_t>(v.num()));
    std::sort(primes.begin(), primes.end());
    std::vector<std::int64_t> factors;
    std::int64_t rest = product;
    for (auto p : primes)
        while (rest % p == 0) {
            factors.push_back(p);
            rest /= p;
        }
    if (rest != 1)
        throw std::invalid_argument("prime decomposition: " + std::to_string(product) +
                                    " leaves residual " + std::to_string(rest));
    return factors;
}

}  // namespace contextlab
