#pragma once

// Closed-form Dirichlet Laplacian spectra (boxes in any dimension up to 5,
// disks in the plane) and the Weyl asymptotic eigenvalue.

#include <span>

#include "magspec/spectrum.hpp"

namespace magspec::analytic {

inline constexpr int kMaxBoxDim = 5;
inline constexpr int kMaxBoxCount = 1'000'000;
inline constexpr int kMaxDiskCount = 10'000;

/// First `count` eigenvalues pi^2 sum m_i^2 / L_i^2 (m_i >= 1) of the box
/// prod [0, L_i], with multiplicity. Throws DomainError on bad arguments and
/// NumericalError if the lattice enumeration would grow past its bound.
Spectrum box_spectrum(std::span<const double> lengths, int count);

/// First `count` eigenvalues (j_{n,m} / R)^2 of the disk of radius R; every
/// angular index n >= 1 contributes twice.
Spectrum disk_spectrum(double radius, int count);

/// 4 pi^2 v_d^{-2/d} |Omega|^{-2/d} k^{2/d}.
double weyl_eigenvalue(int d, double measure, int k);

}  // namespace magspec::analytic
