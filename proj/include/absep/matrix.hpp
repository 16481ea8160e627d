#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace absep {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Dense row-major complex matrix.  The workhorse container for operators,
// states and unitaries; dimensions in this library stay small (≤ 64), so no
// attempt is made at blocking or sparsity.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ComplexMatrix identity(std::size_t d);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    // |v⟩⟨w| (second argument enters conjugated)
    static ComplexMatrix outer(const CVector& v, const CVector& w);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return a_; }
    std::vector<Complex>& data() { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    double max_abs() const;           // max_ij |a_ij|
    double frobenius_norm() const;
    double hermiticity_defect() const;  // max |a_ij - conj(a_ji)|
    double unitarity_defect() const;    // max |(A A^† - I)_ij|
    bool is_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> a_;
};

// Kronecker product with A-major index convention: (i_A i_B)(j_A j_B).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
CVector tensor(const CVector& a, const CVector& b);

CVector mat_vec(const ComplexMatrix& a, const CVector& v);
double vec_norm(const CVector& v);
void normalize(CVector& v);
Complex inner(const CVector& v, const CVector& w);  // ⟨v|w⟩

// U X U^†
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& x);

// Square Hermitian operator; construction rejects matrices whose
// hermiticity defect exceeds kHermitianTol or that contain non-finite
// entries.  Stored symmetrized so downstream code can rely on exact
// a_ij == conj(a_ji).
class HermitianMatrix {
public:
    explicit HermitianMatrix(ComplexMatrix m);
    // For matrices Hermitian by construction (partial transpose of a
    // Hermitian input, sums of projectors, ...); still symmetrizes.
    static HermitianMatrix trusted(ComplexMatrix m);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& mat() const { return m_; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    double trace_real() const { return m_.trace().real(); }

private:
    HermitianMatrix() = default;
    void symmetrize();
    ComplexMatrix m_;
};

class UnitaryMatrix {
public:
    explicit UnitaryMatrix(ComplexMatrix m);
    static UnitaryMatrix identity(std::size_t d) { return UnitaryMatrix(ComplexMatrix::identity(d)); }

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& mat() const { return m_; }

private:
    ComplexMatrix m_;
};

// Unit-trace Hermitian operator.  Positivity is not re-verified on every
// construction (an eigendecomposition per wrap would dominate hot loops);
// criteria that depend on positivity check the spectrum themselves.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);
    explicit DensityMatrix(HermitianMatrix m);

    std::size_t dim() const { return h_.dim(); }
    const HermitianMatrix& herm() const { return h_; }
    const ComplexMatrix& mat() const { return h_.mat(); }

private:
    HermitianMatrix h_;
};

// Pauli matrices and standard entangled vectors.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix pauli(int i);  // 0 → I₂, 1..3 → σ_x, σ_y, σ_z

// (|00⟩ + |11⟩)/√2 as a dim-4 vector
CVector bell_phi_plus();
// Σ_{i<min(m,n)} |i⟩_m ⊗ |i⟩_n / √min(m,n)
CVector maximally_entangled(int m, int n);

}  // namespace absep
