#pragma once

/*
 * Dense vectors and square matrices over an exact (Rational) or
 * floating (double) scalar, plus the projector / Householder reflector
 * algebra built on them.
 *
 * Exact mode compares with zero tolerance. Float mode uses the single
 * absolute tolerance kFloatTolerance on unit-scale quantities.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contextlab/rational.hpp"

namespace contextlab {

inline constexpr double kFloatTolerance = 1e-9;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation needs a nonzero vector and gets the zero vector.
class ZeroVectorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class OrthogonalityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static std::string str(const Rational& v) { return v.to_string(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static bool is_zero(double v) { return std::abs(v) <= kFloatTolerance; }
    static bool equal(double a, double b) { return std::abs(a - b) <= kFloatTolerance; }
    static std::string str(double v) {
        std::ostringstream os;
        os << (is_zero(v) ? 0.0 : v);
        return os.str();
    }
};

template <typename T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <Scalar T>
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : data_(dim, T(0)) {}
    explicit Vector(std::vector<T> components) : data_(std::move(components)) {}
    Vector(std::initializer_list<T> components) : data_(components) {}

    static Vector unit(std::size_t dim, std::size_t axis) {
        Vector v(dim);
        v[axis] = T(1);
        return v;
    }

    [[nodiscard]] std::size_t dim() const { return data_.size(); }
    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }
    [[nodiscard]] const std::vector<T>& components() const { return data_; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& v) { return ScalarTraits<T>::is_zero(v); });
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        check_same_dim(a, b);
        Vector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
        return r;
    }

    friend Vector operator-(const Vector& a, const Vector& b) {
        check_same_dim(a, b);
        Vector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
        return r;
    }

    friend Vector operator-(const Vector& a) {
        Vector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
        return r;
    }

    friend Vector operator*(const T& s, const Vector& a) {
        Vector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
        return r;
    }

    /// Exact equality in exact mode, componentwise tolerance in float mode.
    friend bool operator==(const Vector& a, const Vector& b) {
        if (a.dim() != b.dim()) return false;
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!ScalarTraits<T>::equal(a[i], b[i])) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += ScalarTraits<T>::str(data_[i]);
        }
        return s + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Vector& v) { return os << v.to_string(); }

    static void check_same_dim(const Vector& a, const Vector& b) {
        if (a.dim() != b.dim())
            throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }

private:
    std::vector<T> data_;
};

template <Scalar T>
T inner_product(const Vector<T>& x, const Vector<T>& y) {
    Vector<T>::check_same_dim(x, y);
    T acc(0);
    for (std::size_t i = 0; i < x.dim(); ++i) acc += x[i] * y[i];
    return acc;
}

template <Scalar T>
bool orthogonal(const Vector<T>& x, const Vector<T>& y) {
    return ScalarTraits<T>::is_zero(inner_product(x, y));
}

inline double norm(const Vector<double>& x) { return std::sqrt(inner_product(x, x)); }

/// Dense n x n matrix, row-major.
template <Scalar T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionError("matrix literal is not square");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static SquareMatrix diagonal(const std::vector<T>& entries) {
        SquareMatrix m(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    /// |x><y|
    static SquareMatrix outer(const Vector<T>& x, const Vector<T>& y) {
        Vector<T>::check_same_dim(x, y);
        SquareMatrix m(x.dim());
        for (std::size_t i = 0; i < x.dim(); ++i)
            for (std::size_t j = 0; j < x.dim(); ++j) m(i, j) = x[i] * y[j];
        return m;
    }

    /// Matrix whose rows are the given vectors.
    static SquareMatrix from_rows(const std::vector<Vector<T>>& rows) {
        SquareMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].dim() != rows.size()) throw DimensionError("from_rows: need n vectors of dimension n");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    [[nodiscard]] SquareMatrix transpose() const {
        SquareMatrix t(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] T trace() const {
        T acc(0);
        for (std::size_t i = 0; i < n_; ++i) acc += (*this)(i, i);
        return acc;
    }

    [[nodiscard]] bool is_symmetric() const { return *this == transpose(); }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        check_same_dim(a, b);
        SquareMatrix r(a.n_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }

    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        check_same_dim(a, b);
        SquareMatrix r(a.n_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }

    friend SquareMatrix operator-(const SquareMatrix& a) { return T(-1) * a; }

    friend SquareMatrix operator*(const T& s, const SquareMatrix& a) {
        SquareMatrix r(a.n_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
        return r;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        check_same_dim(a, b);
        SquareMatrix r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                const T& aik = a(i, k);
                if (ScalarTraits<T>::exact && ScalarTraits<T>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Vector<T> operator*(const SquareMatrix& a, const Vector<T>& v) {
        if (a.n_ != v.dim()) throw DimensionError("matrix-vector dimension mismatch");
        Vector<T> r(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            T acc(0);
            for (std::size_t j = 0; j < a.n_; ++j) acc += a(i, j) * v[j];
            r[i] = acc;
        }
        return r;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!ScalarTraits<T>::equal(a.data_[k], b.data_[k])) return false;
        return true;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < n_; ++i) {
            s += i ? ", [" : "[";
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) s += ", ";
                s += ScalarTraits<T>::str((*this)(i, j));
            }
            s += "]";
        }
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) { return os << m.to_string(); }

private:
    static void check_same_dim(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) throw DimensionError("matrix dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<T> data_;
};

/*
 * Determinant by Gaussian elimination. In exact mode the first nonzero
 * pivot is taken (entries stay reduced fractions); in float mode the
 * largest-magnitude pivot is used.
 */
template <Scalar T>
T determinant(SquareMatrix<T> a) {
    const std::size_t n = a.dim();
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        if constexpr (ScalarTraits<T>::exact) {
            while (pivot < n && a(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return T(0);
        } else {
            for (std::size_t r = k + 1; r < n; ++r)
                if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
            if (a(pivot, k) == 0.0) return 0.0;
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            det = -det;
        }
        det = det * a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (ScalarTraits<T>::is_zero(a(i, k))) continue;
            T f = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
        }
    }
    return det;
}

/// Rank-one orthogonal projector onto span{x}.
template <Scalar T>
class Projector {
public:
    explicit Projector(Vector<T> generator) : generator_(std::move(generator)) {
        if (generator_.is_zero()) throw ZeroVectorError("projector: zero generator");
        T norm2 = inner_product(generator_, generator_);
        matrix_ = (T(1) / norm2) * SquareMatrix<T>::outer(generator_, generator_);
    }

    [[nodiscard]] const Vector<T>& generator() const { return generator_; }
    [[nodiscard]] const SquareMatrix<T>& matrix() const { return matrix_; }

private:
    Vector<T> generator_;
    SquareMatrix<T> matrix_;
};

template <Scalar T>
Projector<T> projector_from_vector(const Vector<T>& x) {
    return Projector<T>(x);
}

/// U_x = 1 - 2 F_x, with the generating vector kept alongside the matrix.
template <Scalar T>
class HouseholderReflector {
public:
    explicit HouseholderReflector(Vector<T> generator) : generator_(std::move(generator)) {
        if (generator_.is_zero()) throw ZeroVectorError("householder: zero generator");
        Projector<T> f(generator_);
        matrix_ = SquareMatrix<T>::identity(generator_.dim()) - T(2) * f.matrix();
    }

    [[nodiscard]] const Vector<T>& generator() const { return generator_; }
    [[nodiscard]] const SquareMatrix<T>& matrix() const { return matrix_; }
    [[nodiscard]] std::size_t dim() const { return generator_.dim(); }

    /// Applies the reflection directly from the generator: v - 2 <x|v>/<x|x> x.
    [[nodiscard]] Vector<T> apply(const Vector<T>& v) const {
        Vector<T>::check_same_dim(generator_, v);
        T coeff = T(2) * inner_product(generator_, v) / inner_product(generator_, generator_);
        return v - coeff * generator_;
    }

private:
    Vector<T> generator_;
    SquareMatrix<T> matrix_;
};

template <Scalar T>
HouseholderReflector<T> householder_from_vector(const Vector<T>& x) {
    return HouseholderReflector<T>(x);
}

template <Scalar T>
Vector<T> reflect(const HouseholderReflector<T>& u, const Vector<T>& v) {
    return u.apply(v);
}

/*
 * Vector orthogonal to x: the first standard basis vector e_k whose
 * residual e_k - (<e_k|x>/<x|x>) x is nonzero.
 */
template <Scalar T>
Vector<T> first_orthogonal_residual(const Vector<T>& x) {
    if (x.is_zero()) throw ZeroVectorError("orthogonal residual: zero vector");
    T norm2 = inner_product(x, x);
    for (std::size_t k = 0; k < x.dim(); ++k) {
        Vector<T> e = Vector<T>::unit(x.dim(), k);
        Vector<T> residual = e - (x[k] / norm2) * x;
        if (!residual.is_zero()) return residual;
    }
    throw DimensionError("orthogonal residual: no orthogonal complement in dimension " + std::to_string(x.dim()));
}

/// Householder reflector swapping two vectors of equal norm.
template <Scalar T>
HouseholderReflector<T> reflector_between(const Vector<T>& x, const Vector<T>& y) {
    Vector<T>::check_same_dim(x, y);
    if (x.is_zero() || y.is_zero()) throw ZeroVectorError("reflector_between: zero vector");
    if (!ScalarTraits<T>::equal(inner_product(x, x), inner_product(y, y)))
        throw std::invalid_argument("reflector_between: norm mismatch between " + x.to_string() + " and " +
                                    y.to_string());
    Vector<T> z = x - y;
    if (z.is_zero()) return HouseholderReflector<T>(first_orthogonal_residual(x));
    return HouseholderReflector<T>(std::move(z));
}

template <Scalar T>
struct ContextProduct {
    SquareMatrix<T> matrix;
    bool complete = false;  // basis size equals the dimension
};

/*
 * Product of (1 - 2 F_i) over mutually orthogonal, possibly unnormalized
 * vectors. Equals -1 for a complete orthogonal basis.
 */
template <Scalar T>
ContextProduct<T> context_product(const std::vector<Vector<T>>& basis) {
    if (basis.empty()) throw std::invalid_argument("context_product: empty basis");
    const std::size_t n = basis.front().dim();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].dim() != n) throw DimensionError("context_product: mixed dimensions");
        if (basis[i].is_zero()) throw ZeroVectorError("context_product: zero vector at position " + std::to_string(i));
        for (std::size_t j = 0; j < i; ++j)
            if (!orthogonal(basis[i], basis[j]))
                throw OrthogonalityError("context_product: vectors " + std::to_string(j) + " and " + std::to_string(i) +
                                         " are not orthogonal");
    }
    ContextProduct<T> result{SquareMatrix<T>::identity(n), basis.size() == n};
    for (const auto& v : basis) result.matrix = result.matrix * HouseholderReflector<T>(v).matrix();
    return result;
}

class LinearDependenceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Orthonormalization {
    // image of each input under its reflector, normalized: +-e_i
    std::vector<Vector<double>> vectors;
    // Q e_i for the accumulated reflector product Q; spans the input vectors
    std::vector<Vector<double>> span_basis;
    std::vector<HouseholderReflector<double>> reflectors;
};

/*
 * Householder orthonormalization. Step i takes s_i after the previous
 * reflectors, drops its components on e_1..e_{i-1}, and reflects the
 * remainder t onto ||t|| e_i with generator z_i = t - ||t|| e_i.
 */
inline Orthonormalization orthonormalize(const std::vector<Vector<double>>& inputs) {
    Orthonormalization out;
    if (inputs.empty()) return out;
    const std::size_t n = inputs.front().dim();
    if (inputs.size() > n) throw LinearDependenceError("orthonormalize: more vectors than dimensions");
    for (const auto& s : inputs)
        if (s.dim() != n) throw DimensionError("orthonormalize: mixed dimensions");

    for (std::size_t i = 0; i < inputs.size(); ++i) {
        Vector<double> t = inputs[i];
        for (const auto& h : out.reflectors) t = h.apply(t);
        for (std::size_t j = 0; j < i; ++j) t[j] = 0.0;
        double len = norm(t);
        if (len < kFloatTolerance)
            throw LinearDependenceError("orthonormalize: vector " + std::to_string(i) + " is linearly dependent");
        Vector<double> target = len * Vector<double>::unit(n, i);
        auto h = reflector_between(t, target);
        out.vectors.push_back((1.0 / len) * h.apply(t));
        out.reflectors.push_back(std::move(h));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        Vector<double> q = Vector<double>::unit(n, i);
        for (auto it = out.reflectors.rbegin(); it != out.reflectors.rend(); ++it) q = it->apply(q);
        out.span_basis.push_back(std::move(q));
    }
    return out;
}

}  // namespace contextlab
