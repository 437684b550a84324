#pragma once

namespace qig {

// Numerical tolerances shared across the library. Builders symmetrize or
// clip inputs that are within tolerance and reject anything worse.
constexpr double kHermTol = 1e-12;       // Hermiticity of operator inputs
constexpr double kTraceTol = 1e-12;      // trace-one for density operators
constexpr double kEigClipFloor = -1e-12; // eigenvalues above this are clipped to 0
constexpr double kRankTol = 1e-10;       // eigenvalues below this count as rank-deficient
constexpr double kChannelTol = 1e-10;    // CPTP validation tolerance
constexpr double kSupportTol = 1e-10;    // off-support weight that triggers the infinite branch
constexpr double kDiagLimitTol = 1e-8;   // |x-y| <= tol*max(x,y) switches to the diagonal limit

constexpr int kMaxDim = 64;              // desk scale; superoperators stay <= 4096^2 dense

} // namespace qig
