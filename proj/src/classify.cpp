#include "so4/classify.hpp"

#include <string>

#include "so4/errors.hpp"

namespace so4 {

namespace {

using Kind = Sl2Type::Kind;

Kind kind_of(const Element& u, Factor f) { return sl2_element_type(component(u, f)).kind; }

// lambda with u = lambda * n; n must be nonzero.
Scalar ratio(const Element& u, const Element& n, const char* where) {
  std::size_t p = 0;
  while (n[p].is_zero()) ++p;
  Scalar lambda = u[p] / n[p];
  if (lambda * n != u) throw InternalInconsistency(std::string(where) + ": expected an eigenvector");
  return lambda;
}

const Element& outside(const Subalgebra& s, const Subalgebra& d) {
  for (const auto& b : s.basis())
    if (!d.contains(b)) return b;
  throw InternalInconsistency("no complement element");
}

std::optional<Kind> line_kind(const Subalgebra& line, Factor f) {
  if (line.dim() != 1) return std::nullopt;
  return kind_of(line.basis()[0], f);
}

struct SplitEigen {
  Element n1, n2;
  Scalar mu1, mu2;
};

// For a solvable s whose derived algebra is 2-dimensional and is spanned by
// one line in each factor: the eigenvalues of a complement element on them.
std::optional<SplitEigen> split_eigendata(const Subalgebra& s, const Subalgebra& d) {
  if (d.dim() != 2 || s.dim() != 3) return std::nullopt;
  Subalgebra d1 = factor_intersection(d, Factor::First);
  Subalgebra d2 = factor_intersection(d, Factor::Second);
  if (d1.dim() != 1 || d2.dim() != 1) return std::nullopt;
  const Element& t = outside(s, d);
  SplitEigen out{d1.basis()[0], d2.basis()[0], 0, 0};
  out.mu1 = ratio(bracket(t, out.n1), out.n1, "split_eigendata");
  out.mu2 = ratio(bracket(t, out.n2), out.n2, "split_eigendata");
  return out;
}

}  // namespace

StructuralProfile structural_profile(const Subalgebra& s) {
  StructuralProfile p;
  p.dim = s.dim();
  p.solvable = s.is_solvable();
  p.derived_dims = s.derived_dims();
  Subalgebra p1 = factor_projection(s, Factor::First);
  Subalgebra p2 = factor_projection(s, Factor::Second);
  Subalgebra i1 = factor_intersection(s, Factor::First);
  Subalgebra i2 = factor_intersection(s, Factor::Second);
  p.proj_dims = {p1.dim(), p2.dim()};
  p.inter_dims = {i1.dim(), i2.dim()};
  p.proj_types = {line_kind(p1, Factor::First), line_kind(p2, Factor::Second)};
  p.inter_types = {line_kind(i1, Factor::First), line_kind(i2, Factor::Second)};
  if (p.solvable && s.dim() == 3) {
    if (auto eig = split_eigendata(s, derived_algebra(s))) {
      Scalar sum = eig->mu1 + eig->mu2;
      Scalar scale = sum.is_zero() ? eig->mu1 : sum;
      p.torus_eigendata = {eig->mu1 / scale, eig->mu2 / scale};
    }
  }
  return p;
}

ClassLabel classify(const Subalgebra& s) {
  switch (s.dim()) {
    case 0:
      return ClassLabel::discrete(Family::Zero);
    case 1:
      return classify_dim1(s);
    case 2:
      return classify_dim2(s);
    case 3:
      return classify_dim3(s);
    default:
      return classify_dim4plus(s);
  }
}

ClassLabel classify(std::span<const Element> generators) { return classify(Subalgebra::span_close(generators)); }

ClassLabel classify_dim1(const Subalgebra& s) {
  if (s.dim() != 1) throw InvalidArgument("classify_dim1 needs a 1-dimensional subalgebra");
  const Element& u = s.basis()[0];
  Sl2Type t1 = sl2_element_type(component(u, Factor::First));
  Sl2Type t2 = sl2_element_type(component(u, Factor::Second));
  using enum Family;
  switch (t1.kind) {
    case Kind::Zero:
      return ClassLabel::discrete(t2.kind == Kind::Nilpotent ? J2 : J4);
    case Kind::Nilpotent:
      if (t2.kind == Kind::Zero) return ClassLabel::discrete(J1);
      return ClassLabel::discrete(t2.kind == Kind::Nilpotent ? J5 : J6);
    case Kind::Semisimple:
      if (t2.kind == Kind::Zero) return ClassLabel::discrete(J3);
      if (t2.kind == Kind::Nilpotent) return ClassLabel::discrete(J7);
      // h1 + a h2 has det ratio a^2, invariant under scaling and conjugation.
      return ClassLabel::j8(t2.det / t1.det);
  }
  throw InternalInconsistency("classify_dim1: unreachable");
}

ClassLabel classify_dim2(const Subalgebra& s) {
  if (s.dim() != 2) throw InvalidArgument("classify_dim2 needs a 2-dimensional subalgebra");
  using enum Family;

  if (s.is_abelian()) {
    // An abelian plane splits as one line per factor.
    Subalgebra i1 = factor_intersection(s, Factor::First);
    Subalgebra i2 = factor_intersection(s, Factor::Second);
    if (i1.dim() != 1 || i2.dim() != 1) throw InternalInconsistency("abelian plane does not split over the factors");
    Kind k1 = kind_of(i1.basis()[0], Factor::First);
    Kind k2 = kind_of(i2.basis()[0], Factor::Second);
    if (k1 == Kind::Nilpotent) return ClassLabel::discrete(k2 == Kind::Nilpotent ? K1_1 : K1_2);
    return ClassLabel::discrete(k2 == Kind::Nilpotent ? K1_3 : K1_4);
  }

  Subalgebra d = derived_algebra(s);
  const Element& n = d.basis()[0];
  Element t = outside(s, d);
  t *= ratio(bracket(t, n), n, "classify_dim2").inverse();  // now [t, n] = n

  const bool in_first = component(n, Factor::Second).is_zero();
  const bool in_second = component(n, Factor::First).is_zero();
  if (!in_first && !in_second) return ClassLabel::discrete(K2_1);

  // t is fixed up to adding multiples of n, which only moves its component in
  // n's own factor; det of that component is -1/4.
  const Factor home = in_first ? Factor::First : Factor::Second;
  Sl2Type t_home = sl2_element_type(component(t, home));
  Sl2Type t_other = sl2_element_type(component(t, other(home)));
  switch (t_other.kind) {
    case Kind::Zero:
      return in_first ? ClassLabel::k2_2(0) : ClassLabel::k2_4(0);
    case Kind::Nilpotent:
      return ClassLabel::discrete(in_first ? K2_3 : K2_5);
    case Kind::Semisimple: {
      Scalar a_squared = t_other.det / t_home.det;
      return in_first ? ClassLabel::k2_2(a_squared) : ClassLabel::k2_4(a_squared);
    }
  }
  throw InternalInconsistency("classify_dim2: unreachable");
}

ClassLabel classify_dim3(const Subalgebra& s) {
  if (s.dim() != 3) throw InvalidArgument("classify_dim3 needs a 3-dimensional subalgebra");
  using enum Family;

  if (!s.is_solvable()) {
    if (determinant(killing_form(s)).is_zero()) throw InternalInconsistency("3-dim non-solvable with degenerate Killing form");
    const int p1 = factor_projection(s, Factor::First).dim();
    const int p2 = factor_projection(s, Factor::Second).dim();
    if (p2 == 0) return ClassLabel::discrete(A1_1);
    if (p1 == 0) return ClassLabel::discrete(A1_2);
    if (p1 == 3 && p2 == 3 && factor_intersection(s, Factor::First).dim() == 0 &&
        factor_intersection(s, Factor::Second).dim() == 0) {
      return ClassLabel::discrete(A1_3);
    }
    throw InternalInconsistency("sl2 subalgebra with unexpected projections");
  }

  Subalgebra d = derived_algebra(s);
  if (d.dim() == 0) throw InternalInconsistency("3-dim abelian subalgebra (type L1)");

  if (d.dim() == 2) {
    auto eig = split_eigendata(s, d);
    if (!eig) throw InternalInconsistency("2-dim derived algebra does not split over the factors");
    if (kind_of(eig->n1, Factor::First) != Kind::Nilpotent || kind_of(eig->n2, Factor::Second) != Kind::Nilpotent) {
      throw InternalInconsistency("derived algebra is not nilpotent");
    }
    const Scalar& mu1 = eig->mu1;
    const Scalar& mu2 = eig->mu2;
    if (mu1.is_zero() || mu2.is_zero()) throw InternalInconsistency("degenerate eigenvalue on derived algebra");
    if (mu1 == mu2) return ClassLabel::discrete(L2_1);
    Scalar sum = mu1 + mu2;
    if (sum.is_zero()) return ClassLabel::discrete(L4_1);
    Scalar a = -(mu1 * mu2) / (sum * sum);
    // 2 mu1/(mu1+mu2) - 1 squares to 1+4a; branch 1 is the principal root.
    Scalar root = Scalar(2) * mu1 / sum - Scalar(1);
    return ClassLabel::l3(a, in_principal_half_plane(root) ? 1 : 2);
  }

  // d is one nilpotent line inside one factor; s = (line in the other factor) + Borel.
  const Element& n = d.basis()[0];
  bool acts = false;
  for (const auto& b : s.basis()) acts = acts || !bracket(b, n).is_zero();
  if (!acts) throw InternalInconsistency("central derived line (type L5)");
  const bool in_first = component(n, Factor::Second).is_zero();
  const bool in_second = component(n, Factor::First).is_zero();
  if (in_first == in_second) throw InternalInconsistency("derived line of L3,0 is not inside a factor");
  const Factor opposite = in_first ? Factor::Second : Factor::First;
  Subalgebra proj = factor_projection(s, opposite);
  if (proj.dim() != 1) throw InternalInconsistency("L3,0 with unexpected projection");
  const Kind k = kind_of(proj.basis()[0], opposite);
  if (in_second) return ClassLabel::discrete(k == Kind::Semisimple ? L3_0_1 : L3_0_2);
  return ClassLabel::discrete(k == Kind::Semisimple ? L3_0_3 : L3_0_4);
}

ClassLabel classify_dim4plus(const Subalgebra& s) {
  using enum Family;
  if (s.dim() == 6) return ClassLabel::discrete(Full);
  if (s.dim() != 4 && s.dim() != 5) throw InvalidArgument("classify_dim4plus needs dimension 4, 5 or 6");

  if (s.is_solvable()) {
    if (s.dim() == 5) throw InternalInconsistency("solvable subalgebra of dimension 5");
    return ClassLabel::discrete(M8_1);
  }

  Subalgebra levi = levi_factor(s);
  Subalgebra rad = radical(s);
  if (levi.dim() != 3) throw InternalInconsistency("Levi factor is not 3-dimensional");
  Factor base;
  if (factor_projection(levi, Factor::Second).dim() == 0) {
    base = Factor::First;
  } else if (factor_projection(levi, Factor::First).dim() == 0) {
    base = Factor::Second;
  } else {
    throw InternalInconsistency("the diagonal sl2 has no proper extension");
  }
  const Factor complement = other(base);
  for (const auto& r : rad.basis()) {
    if (!component(r, base).is_zero()) throw InternalInconsistency("radical is not in the complementary factor");
  }

  if (s.dim() == 4) {
    const Kind k = kind_of(rad.basis()[0], complement);
    if (base == Factor::First) return ClassLabel::discrete(k == Kind::Semisimple ? A1J_1 : A1J_2);
    return ClassLabel::discrete(k == Kind::Semisimple ? A1J_3 : A1J_4);
  }
  if (rad.dim() != 2 || rad.is_abelian()) throw InternalInconsistency("radical of a 5-dim subalgebra is not K2");
  return ClassLabel::discrete(base == Factor::First ? A1K2_1 : A1K2_2);
}

}  // namespace so4
