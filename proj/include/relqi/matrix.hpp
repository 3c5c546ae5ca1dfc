#pragma once
// Dense complex linear algebra for the fixed 2x2 / 4x4 matrices used by the
// rest of the library: Kronecker product, partial transpose and partial trace
// over the second qubit, Hermitian eigenvalues (cyclic Jacobi) and the trace
// norm. Everything is a pure value type; nothing here allocates.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace relqi {

using Complex = std::complex<double>;

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kJacobiOffdiagTol = 1e-14;

template <std::size_t N>
class SquareMatrix {
    static_assert(N >= 1, "SquareMatrix needs a positive dimension");

  public:
    SquareMatrix() = default;  // zero-filled

    // Row-major nested braces; rejects ragged shapes and non-finite entries.
    SquareMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
        if (rows.size() != N)
            throw std::invalid_argument("SquareMatrix: wrong row count");
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != N)
                throw std::invalid_argument("SquareMatrix: wrong column count");
            std::size_t j = 0;
            for (const Complex& v : row) {
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                    throw std::invalid_argument("SquareMatrix: non-finite entry");
                entries_[i * N + j] = v;
                ++j;
            }
            ++i;
        }
    }

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static SquareMatrix diagonal(const std::array<Complex, N>& d) {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    static constexpr std::size_t dim() { return N; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * N + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * N + j]; }

    SquareMatrix operator+(const SquareMatrix& o) const {
        SquareMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = entries_[k] + o.entries_[k];
        return r;
    }

    SquareMatrix operator-(const SquareMatrix& o) const {
        SquareMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = entries_[k] - o.entries_[k];
        return r;
    }

    SquareMatrix operator*(const SquareMatrix& o) const {
        SquareMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const Complex a = (*this)(i, k);
                for (std::size_t j = 0; j < N; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    SquareMatrix operator*(Complex s) const {
        SquareMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = entries_[k] * s;
        return r;
    }

    SquareMatrix& operator+=(const SquareMatrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) entries_[k] += o.entries_[k];
        return *this;
    }

    SquareMatrix transpose() const {
        SquareMatrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    SquareMatrix conjugate() const {
        SquareMatrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.entries_[k] = std::conj(entries_[k]);
        return r;
    }

    SquareMatrix adjoint() const { return conjugate().transpose(); }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const Complex& v : entries_) m = std::max(m, std::abs(v));
        return m;
    }

    bool is_finite() const {
        for (const Complex& v : entries_)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    bool is_hermitian(double tol = kHermiticityTol) const {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }

  private:
    std::array<Complex, N * N> entries_{};
};

template <std::size_t N>
inline SquareMatrix<N> operator*(Complex s, const SquareMatrix<N>& m) {
    return m * s;
}

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

template <std::size_t N>
inline double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

inline Matrix2 pauli_y() {
    return Matrix2{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}

// Kronecker product; the left factor carries the slow (first-qubit) index.
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
    Matrix4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

// Transpose of the fast (second-qubit) index: ((i,j),(k,l)) -> ((i,l),(k,j)).
// A pure permutation of entries, hence an exact involution.
inline Matrix4 partial_transpose_b(const Matrix4& m) {
    Matrix4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + l, 2 * k + j) = m(2 * i + j, 2 * k + l);
    return r;
}

// Trace over the fast (second-qubit) index; preserves the total trace.
inline Matrix2 partial_trace_b(const Matrix4& m) {
    Matrix2 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t j = 0; j < 2; ++j) r(i, k) += m(2 * i + j, 2 * k + j);
    return r;
}

template <std::size_t N>
struct HermitianEigen {
    std::array<double, N> values{};  // descending
    SquareMatrix<N> vectors;         // eigenvectors as columns, same order
};

// Cyclic Jacobi with complex rotations. Converges quadratically for Hermitian
// input; dimensions here are at most 4, so no pivoting strategy is needed.
// The input is symmetrized first to suppress roundoff-level asymmetry.
template <std::size_t N>
inline HermitianEigen<N> eig_hermitian_full(const SquareMatrix<N>& m) {
    if (!m.is_hermitian())
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");

    SquareMatrix<N> a = (m + m.adjoint()) * Complex(0.5);
    SquareMatrix<N> v = SquareMatrix<N>::identity();

    const auto off_norm = [](const SquareMatrix<N>& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (i != j) s += std::norm(x(i, j));
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 60;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_norm(a) < kJacobiOffdiagTol) break;
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double g = (app - aqq) / (2.0 * mag);
                const double t = (g >= 0.0 ? 1.0 : -1.0) / (std::abs(g) + std::hypot(1.0, g));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex phase = apq / mag;

                SquareMatrix<N> u = SquareMatrix<N>::identity();
                u(p, p) = c;
                u(q, q) = c;
                u(p, q) = -s * phase;
                u(q, p) = s * std::conj(phase);

                a = u.adjoint() * a * u;
                v = v * u;
            }
        }
    }
    if (sweep == kMaxSweeps && off_norm(a) >= kJacobiOffdiagTol)
        throw std::runtime_error("eig_hermitian: Jacobi sweep did not converge");

    HermitianEigen<N> result;
    std::array<std::size_t, N> order{};
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    for (std::size_t i = 0; i < N; ++i) {
        result.values[i] = a(order[i], order[i]).real();
        for (std::size_t r = 0; r < N; ++r) result.vectors(r, i) = v(r, order[i]);
    }
    return result;
}

template <std::size_t N>
inline std::array<double, N> eig_hermitian(const SquareMatrix<N>& m) {
    return eig_hermitian_full(m).values;
}

// Sum of |eigenvalue| of a Hermitian matrix; equals the trace on PSD input.
template <std::size_t N>
inline double trace_norm(const SquareMatrix<N>& m) {
    if (!m.is_hermitian())
        throw std::invalid_argument("trace_norm: matrix is not Hermitian");
    double s = 0.0;
    for (double lambda : eig_hermitian(m)) s += std::abs(lambda);
    return s;
}

// Factors a PSD Hermitian matrix as L L^dagger, L lower triangular. A pivot
// within tol of zero clamps its whole column, so exact rank deficiency stays
// exact in the factor instead of turning into sqrt(eps)-sized noise.
template <std::size_t N>
inline SquareMatrix<N> psd_cholesky(const SquareMatrix<N>& m, double tol = 1e-13) {
    if (!m.is_hermitian())
        throw std::invalid_argument("psd_cholesky: matrix is not Hermitian");
    const double scale = std::max(m.max_abs(), 1e-300);
    SquareMatrix<N> l;
    for (std::size_t k = 0; k < N; ++k) {
        Complex acc = m(k, k);
        for (std::size_t j = 0; j < k; ++j) acc -= l(k, j) * std::conj(l(k, j));
        const double d = acc.real();
        if (d < -tol * scale)
            throw std::invalid_argument("psd_cholesky: matrix is not PSD");
        if (d <= tol * scale) continue;
        const double root = std::sqrt(d);
        l(k, k) = root;
        for (std::size_t i = k + 1; i < N; ++i) {
            Complex s = m(i, k);
            for (std::size_t j = 0; j < k; ++j) s -= l(i, j) * std::conj(l(k, j));
            l(i, k) = s / root;
        }
    }
    return l;
}

// Singular values through the Hermitian dilation [[0, M], [M^dagger, 0]],
// whose spectrum is +/- the singular values. Linear in M, so small singular
// values come out at full precision instead of as sqrt of eps-level noise.
inline std::array<double, 4> singular_values(const Matrix4& m) {
    SquareMatrix<8> d;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            d(i, 4 + j) = m(i, j);
            d(4 + j, i) = std::conj(m(i, j));
        }
    const std::array<double, 8> ev = eig_hermitian(d);
    return {std::max(ev[0], 0.0), std::max(ev[1], 0.0), std::max(ev[2], 0.0),
            std::max(ev[3], 0.0)};
}

}  // namespace relqi
