#pragma once

#include <cstddef>
#include <vector>

namespace pw {

// Eigenvalues of a dense symmetric matrix (row-major, n x n) by cyclic Jacobi
// rotations. Returns the spectrum in ascending order. Sizes here are tiny
// (Gram sections), so O(n^3) sweeps are fine.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

} // namespace pw
