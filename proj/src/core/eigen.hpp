/*
 * (C) Copyright 2026 the fockwig developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <vector>

#include "types.hpp"

namespace fockwig {

/// Eigenvalues (ascending) of the symmetric tridiagonal matrix with the given
/// diagonal and off-diagonal, by implicit QL with Wilkinson shifts.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> offdiag);

/// Eigenvalues (ascending) of a Hermitian matrix. Real-symmetric input is
/// reduced directly; a genuinely complex matrix goes through the 2n x 2n
/// real-symmetric embedding [[X, -Y], [Y, X]], whose spectrum is that of
/// X + iY doubled.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

}  // namespace fockwig
