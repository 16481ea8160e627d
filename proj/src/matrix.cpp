#include "absep/matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "absep/tolerances.hpp"

namespace absep {

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::outer(const CVector& v, const CVector& w) {
    ComplexMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
    return m;
}

Complex ComplexMatrix::trace() const {
    if (!square()) throw std::invalid_argument("trace: matrix not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (!square()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

double ComplexMatrix::unitarity_defect() const {
    if (!square()) return std::numeric_limits<double>::infinity();
    const ComplexMatrix g = (*this) * adjoint();
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Complex want = (i == j) ? Complex(1.0) : Complex(0.0);
            m = std::max(m, std::abs(g(i, j) - want));
        }
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& z : a_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix *: shape mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex v = a(ia, ja);
            if (v == Complex(0.0)) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = v * b(ib, jb);
        }
    return c;
}

CVector tensor(const CVector& a, const CVector& b) {
    CVector c(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i * b.size() + j] = a[i] * b[j];
    return c;
}

CVector mat_vec(const ComplexMatrix& a, const CVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    CVector out(a.rows(), Complex(0.0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

double vec_norm(const CVector& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

void normalize(CVector& v) {
    const double n = vec_norm(v);
    if (n == 0.0) throw std::invalid_argument("normalize: zero vector");
    for (auto& z : v) z /= n;
}

Complex inner(const CVector& v, const CVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("inner: length mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * w[i];
    return s;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& x) {
    return u * x * u.adjoint();
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.square()) throw std::invalid_argument("HermitianMatrix: not square");
    if (!m_.is_finite()) throw std::invalid_argument("HermitianMatrix: non-finite entries");
    if (m_.hermiticity_defect() > kHermitianTol)
        throw std::invalid_argument("HermitianMatrix: hermiticity defect exceeds 1e-10");
    symmetrize();
}

HermitianMatrix HermitianMatrix::trusted(ComplexMatrix m) {
    HermitianMatrix h;
    h.m_ = std::move(m);
    h.symmetrize();
    return h;
}

void HermitianMatrix::symmetrize() {
    const std::size_t d = m_.rows();
    for (std::size_t i = 0; i < d; ++i) {
        m_(i, i) = Complex(m_(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex v = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
            m_(i, j) = v;
            m_(j, i) = std::conj(v);
        }
    }
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.square()) throw std::invalid_argument("UnitaryMatrix: not square");
    if (!m_.is_finite()) throw std::invalid_argument("UnitaryMatrix: non-finite entries");
    if (m_.unitarity_defect() > kUnitaryTol)
        throw std::invalid_argument("UnitaryMatrix: unitarity defect exceeds 1e-10");
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : h_(HermitianMatrix(std::move(m))) {
    if (std::abs(h_.trace_real() - 1.0) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
}

DensityMatrix::DensityMatrix(HermitianMatrix m) : h_(std::move(m)) {
    if (std::abs(h_.trace_real() - 1.0) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix pauli(int i) {
    switch (i) {
        case 0: return ComplexMatrix::identity(2);
        case 1: return pauli_x();
        case 2: return pauli_y();
        case 3: return pauli_z();
        default: throw std::invalid_argument("pauli: index must be 0..3");
    }
}

CVector bell_phi_plus() {
    CVector v(4, Complex(0.0));
    v[0] = v[3] = 1.0 / std::sqrt(2.0);
    return v;
}

CVector maximally_entangled(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("maximally_entangled: dims must be >= 2");
    const int r = std::min(m, n);
    CVector v(static_cast<std::size_t>(m) * n, Complex(0.0));
    const double a = 1.0 / std::sqrt(static_cast<double>(r));
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i) * n + i] = a;
    return v;
}

}  // namespace absep
