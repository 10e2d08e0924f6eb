#pragma once

#include <cstdint>

namespace annulus {

// Matrix-side dimensions: M eigenvalues, Gaussian block M x N_cols, Wishart
// block n x M. Requires N_cols >= M and n >= M.
struct MatrixDims {
    int M;
    int N_cols;
    int n;
};

// Plasma-side parameters. Matrix sampling needs Q*N and q*N integral; the
// theory formulas accept any real Q, q >= 0. R defaults to 1/2 so 2R = 1 and
// planar coordinates are dimensionless.
struct ModelParams {
    int N;
    double Q;
    double q;
    double R = 0.5;
};

ModelParams params_from_dims(const MatrixDims& d);
MatrixDims dims_from_params(const ModelParams& p);

}  // namespace annulus
