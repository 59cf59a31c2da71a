// cuspdet — spectral invariants of finite-area hyperbolic surfaces with cusps
//
// Copyright (c) 2026 The cuspdet authors
//
// Distributed under the MIT License; see the LICENSE file in the project
// root for the full license text.

#ifndef CUSPDET_SURFACE_HPP
#define CUSPDET_SURFACE_HPP

#include <cuspdet/errors.hpp>

namespace cuspdet {

// Topological type of a finite-area hyperbolic surface: genus g with n
// cusps.  The standing assumption 2g + n >= 3 guarantees a hyperbolic
// structure of finite area exists and excludes the degenerate types
// (sphere, torus, once/twice-punctured sphere).
struct SurfaceType {
  int g = 0; // genus, >= 0
  int n = 0; // number of cusps, >= 0

  SurfaceType() = default;
  SurfaceType(int genus, int cusps) : g(genus), n(cusps) { validate(); }

  void validate() const {
    if (g < 0 || n < 0 || 2 * g + n < 3) {
      throw DomainError("SurfaceType requires g >= 0, n >= 0 and 2g + n >= 3 (got g=" +
                        std::to_string(g) + ", n=" + std::to_string(n) + ")");
    }
  }

  // Euler characteristic chi = 2 - 2g - n; always negative on the
  // admissible range.
  int chi() const { return 2 - 2 * g - n; }

  // Hyperbolic area by Gauss-Bonnet: area = -2*pi*chi = 2*pi*(2g - 2 + n).
  // Returned as the integer multiple of 2*pi to keep it exact.
  int area_over_two_pi() const { return 2 * g - 2 + n; }

  bool operator==(const SurfaceType& other) const { return g == other.g && n == other.n; }
  bool operator!=(const SurfaceType& other) const { return !(*this == other); }
};

} // namespace cuspdet

#endif // CUSPDET_SURFACE_HPP
