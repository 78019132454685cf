#pragma once

#include <cstdint>
#include <optional>

#include "so4/element.hpp"
#include "so4/subalgebra.hpp"

namespace so4 {

/// Conjugation by (A, B) in SL(2,C) x SL(2,C), acting factor-wise on the
/// 2x2 diagonal blocks. det(A) = det(B) = 1 exactly.
class InnerAutomorphism {
 public:
  /// The identity.
  InnerAutomorphism() = default;
  /// Throws InvalidArgument unless both determinants are exactly 1.
  InnerAutomorphism(Mat2 first, Mat2 second);

  const Mat2& first() const noexcept { return a_; }
  const Mat2& second() const noexcept { return b_; }

  /// this ∘ other
  InnerAutomorphism compose(const InnerAutomorphism& other) const;
  InnerAutomorphism inverse() const;

  friend bool operator==(const InnerAutomorphism&, const InnerAutomorphism&) = default;

 private:
  Mat2 a_ = Mat2::identity();
  Mat2 b_ = Mat2::identity();
};

Element apply(const InnerAutomorphism& phi, const Element& u);
Subalgebra apply(const InnerAutomorphism& phi, const Subalgebra& s);

struct RandomInnerOptions {
  /// Bound on numerators and denominators of the random entries.
  int height = 10;
};

/// Deterministic in (seed, complexity): each factor is a product of
/// `complexity` alternating elementary unipotents [[1,t],[0,1]] / [[1,0],[t,1]]
/// with nonzero Gaussian-rational t. Throws InvalidArgument if complexity < 1.
InnerAutomorphism random_inner(std::uint64_t seed, int complexity, RandomInnerOptions options = {});

/// The outer automorphism exchanging the two sl2 factors.
Element factor_swap(const Element& u);
Subalgebra factor_swap(const Subalgebra& s);

/// Equivalence up to inner automorphism, decided by the classifier.
bool equivalent(const Subalgebra& s, const Subalgebra& t);

/// Best-effort search for phi with phi(s) = t.
///
/// Candidates, each counting one unit of budget: the identity, the Weyl
/// elements [[0,1],[-1,0]] in either or both factors, a few diagonal torus
/// elements, then random_inner(n, c) for n = 0, 1, ... and c = 1, 2, 3, each
/// also composed with the three Weyl moves. Any returned witness has been
/// checked exactly.
std::optional<InnerAutomorphism> find_witness(const Subalgebra& s, const Subalgebra& t, int budget);

}  // namespace so4
