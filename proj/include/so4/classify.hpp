#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "so4/element.hpp"
#include "so4/label.hpp"
#include "so4/subalgebra.hpp"

namespace so4 {

/// Invariants of a subalgebra under SL(2,C) x SL(2,C) conjugation.
///
/// Conjugation acts factor-wise, so projections, intersections with the
/// factors, the conjugacy types of lines in a factor, and eigenvalues of the
/// adjoint action on factor-stable lines are all preserved.
struct StructuralProfile {
  int dim = 0;
  bool solvable = true;
  std::vector<int> derived_dims;
  std::pair<int, int> proj_dims;
  std::pair<int, int> inter_dims;
  /// Types of 1-dimensional factor intersections (nullopt otherwise).
  std::pair<std::optional<Sl2Type::Kind>, std::optional<Sl2Type::Kind>> inter_types;
  /// Types of 1-dimensional factor projections (nullopt otherwise).
  std::pair<std::optional<Sl2Type::Kind>, std::optional<Sl2Type::Kind>> proj_types;
  /// Eigenvalues (factor 1, factor 2) of a complement element acting on a
  /// 2-dimensional derived algebra split over the factors, scaled to sum 1
  /// (or first = 1 when they sum to 0). Empty when not applicable.
  std::vector<Scalar> torus_eigendata;

  friend bool operator==(const StructuralProfile&, const StructuralProfile&) = default;
};

StructuralProfile structural_profile(const Subalgebra& s);

/// Class of s up to inner automorphism. Total on valid subalgebras.
ClassLabel classify(const Subalgebra& s);

ClassLabel classify_dim1(const Subalgebra& s);
ClassLabel classify_dim2(const Subalgebra& s);
ClassLabel classify_dim3(const Subalgebra& s);
ClassLabel classify_dim4plus(const Subalgebra& s);

/// Convenience: span_close + classify. Propagates NotClosed.
ClassLabel classify(std::span<const Element> generators);

}  // namespace so4
