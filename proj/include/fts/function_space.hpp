#pragma once

#include <Eigen/Dense>

#include "fts/errors.hpp"

namespace fts {

/// Regular grid of T points on [0,1]: t_j = j/T, quadrature weight dt = 1/T.
///
/// With this weight the discrete inner product makes the scaled Fourier
/// family {1, sqrt(2)cos(2*pi*k*t), sqrt(2)sin(2*pi*k*t)} exactly orthonormal
/// for k < T/2, so discretized covariance eigenvalues approximate their L2
/// counterparts independently of T.
struct GridSpec {
    int num_points = 0;

    GridSpec() = default;
    explicit GridSpec(int T) : num_points(T) {
        if (T < 2) throw DimensionError("GridSpec: num_points must be >= 2");
    }

    double step() const { return 1.0 / num_points; }
    double point(int j) const { return static_cast<double>(j) / num_points; }
    bool operator==(const GridSpec& o) const { return num_points == o.num_points; }
    bool operator!=(const GridSpec& o) const { return !(*this == o); }
};

/// One curve sampled on a regular grid; the basic element of H = L2[0,1].
struct FunctionSample {
    GridSpec grid;
    Eigen::VectorXd values;

    FunctionSample() = default;
    FunctionSample(GridSpec g, Eigen::VectorXd v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.num_points)
            throw DimensionError("FunctionSample: values length != grid size");
        if (!values.allFinite())
            throw NumericalError("FunctionSample: non-finite values");
    }

    int size() const { return grid.num_points; }
};

/// Which representation a LinearOperatorMatrix lives in.
///
/// grid:          kernel on the grid; action carries the quadrature weight,
///                (Au)(t_j) = dt * sum_k A(j,k) u(t_k).
/// fourier_coeff: matrix on orthonormal-basis coefficients; plain matvec.
enum class BasisTag { grid, fourier_coeff };

/// Discretized linear operator on H (covariance, cross-covariance, rho, inverses).
struct LinearOperatorMatrix {
    Eigen::MatrixXd entries;
    BasisTag basis = BasisTag::grid;

    LinearOperatorMatrix() = default;
    LinearOperatorMatrix(Eigen::MatrixXd m, BasisTag tag) : entries(std::move(m)), basis(tag) {
        if (entries.rows() != entries.cols())
            throw DimensionError("LinearOperatorMatrix: must be square");
    }

    int dim() const { return static_cast<int>(entries.rows()); }
};

/// Quadrature inner product <u,v> = dt * sum_j u(t_j) v(t_j).
double inner_product(const FunctionSample& u, const FunctionSample& v);

/// L2 norm sqrt(<u,u>).
double l2_norm(const FunctionSample& u);

/// Rank-one operator a (x) b = <a,.> b, as a grid-basis matrix b a^T.
LinearOperatorMatrix rank_one(const FunctionSample& a, const FunctionSample& b);

/// Apply an operator: quadrature-weighted matvec on grid operators,
/// plain matvec on coefficient-basis operators.
FunctionSample apply_operator(const LinearOperatorMatrix& A, const FunctionSample& u);
Eigen::VectorXd apply_operator(const LinearOperatorMatrix& A, const Eigen::VectorXd& coeffs);

/// Operator composition A after B, same basis tag required.
LinearOperatorMatrix compose(const LinearOperatorMatrix& A, const LinearOperatorMatrix& B);

/// Adjoint (transpose of the matrix, same tag).
LinearOperatorMatrix adjoint(const LinearOperatorMatrix& A);

/// The identity operator in the given representation
/// (entries (1/dt) * 1_{j=k} on the grid, plain identity on coefficients).
LinearOperatorMatrix identity_operator(const GridSpec& grid);
LinearOperatorMatrix identity_operator_coeff(int dim);

/// Hilbert-Schmidt norm. Defined for coefficient-basis (orthonormal)
/// representations only, where it equals the Frobenius norm.
double hs_norm(const LinearOperatorMatrix& A);

}  // namespace fts
