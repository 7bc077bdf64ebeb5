#pragma once

// Legendre-symbol matrices.
//
// Storage is 0-based. C_p is conventionally indexed 1..p-1, so its entry
// (i, j) lives at storage (i - 1, j - 1). E_p and M_p are indexed 0..n with
// n = (p - 1) / 2 and use storage indices directly.

#include "legdet/arith.hpp"
#include "legdet/types.hpp"

namespace legdet {

/// Carlitz's matrix: (p-1) x (p-1), entry (i, j) = ((j - i)/p) for 1 <= i, j <= p-1.
IntMatrix build_cp(const OddPrime& p);

/// Chapman's matrix: (n+1) x (n+1), entry (i, j) = ((j - i)/p) for 0 <= i, j <= n.
IntMatrix build_ep(const OddPrime& p);

/// Sun's matrix: [((i - j)/p)]_{0<=i,j<=n} with row 0 replaced by all ones.
IntMatrix build_mp(const OddPrime& p);

enum class MatrixKind { Cp, Ep, Mp };

IntMatrix build_matrix(MatrixKind kind, const OddPrime& p);

} // namespace legdet
