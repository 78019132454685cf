#pragma once

#include <string>
#include <vector>

#include "so4/element.hpp"
#include "so4/subalgebra.hpp"

namespace so4 {

/// Elements with [h,x] = 2x, [h,y] = -2y, [x,y] = h.
class Sl2Triple {
 public:
  /// Throws NotATriple if a relation fails.
  Sl2Triple(Element h, Element x, Element y);

  const Element& h() const noexcept { return h_; }
  const Element& x() const noexcept { return x_; }
  const Element& y() const noexcept { return y_; }

 private:
  Element h_, x_, y_;
};

/// so(4,C) as a module over an sl2 triple under the adjoint action.
/// V(m) has highest weight m and dimension m + 1.
struct ModuleDecomposition {
  std::vector<int> highest_weights;               // sorted descending
  std::vector<Element> highest_weight_vectors;     // aligned with highest_weights

  int total_dim() const;
};

/// Highest-weight vectors are ker(ad x) split into ad h eigenspaces; each
/// eigenspace basis is echelon-canonical. Throws NotATriple if ad h has a
/// non-integral or negative weight on ker(ad x).
ModuleDecomposition adjoint_decompose(const Sl2Triple& t);

/// e.g. "V(2) + 3·V(0)".
std::string render_decomposition(const ModuleDecomposition& d);

struct ExtensionCandidates {
  int extension_dim = 0;
  /// Sum of the trivial summands: the centralizer of the triple.
  Subalgebra trivial_isotypic;

  bool admits_extension() const { return trivial_isotypic.dim() >= extension_dim; }
};

/// Space from which direct-sum extensions of span(t) by a k-dimensional
/// subalgebra must be drawn. k must be 1 or 2.
ExtensionCandidates extension_candidates(const Sl2Triple& t, int k);

/// A standard triple inside a 3-dimensional semisimple subalgebra: the
/// preimage of (h_i, x_i, y_i) under a projection onto a factor that is an
/// isomorphism. Throws InvalidArgument otherwise.
Sl2Triple standard_triple(const Subalgebra& s);

}  // namespace so4
