#include "so4/modulerep.hpp"

#include <algorithm>
#include <map>

#include "so4/errors.hpp"

namespace so4 {

namespace {

// ad(u) on so(4,C) in Chevalley coordinates.
Matrix ambient_ad(const Element& u) {
  Matrix m(kDim, kDim);
  for (std::size_t c = 0; c < kDim; ++c) {
    Element image = bracket(u, Element::unit(static_cast<Coord>(c)));
    for (std::size_t r = 0; r < kDim; ++r) m(r, c) = image[r];
  }
  return m;
}

std::vector<Element> kernel_of_stack(const std::vector<Matrix>& blocks) {
  Matrix m(kDim * blocks.size(), kDim);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) m(b * kDim + r, c) = blocks[b](r, c);
  std::vector<Element> out;
  for (const auto& v : nullspace(m)) out.push_back(Element::from_vector(v));
  return out;
}

}  // namespace

Sl2Triple::Sl2Triple(Element h, Element x, Element y) : h_(std::move(h)), x_(std::move(x)), y_(std::move(y)) {
  if (bracket(h_, x_) != Scalar(2) * x_ || bracket(h_, y_) != Scalar(-2) * y_ || bracket(x_, y_) != h_) {
    throw NotATriple("elements do not satisfy [h,x]=2x, [h,y]=-2y, [x,y]=h");
  }
  if (h_.is_zero()) throw NotATriple("zero triple");
}

int ModuleDecomposition::total_dim() const {
  int total = 0;
  for (int m : highest_weights) total += m + 1;
  return total;
}

ModuleDecomposition adjoint_decompose(const Sl2Triple& t) {
  const Matrix ad_h = ambient_ad(t.h());
  const Matrix ad_x = ambient_ad(t.x());
  const std::size_t primitive = kernel_of_stack({ad_x}).size();

  ModuleDecomposition out;
  std::size_t found = 0;
  // Weights of so(4,C) under a triple are bounded by its dimension.
  for (int m = static_cast<int>(kDim); m >= 0; --m) {
    Matrix shifted = ad_h;
    for (std::size_t k = 0; k < kDim; ++k) shifted(k, k) -= Scalar(m);
    for (auto& v : kernel_of_stack({ad_x, shifted})) {
      out.highest_weights.push_back(m);
      out.highest_weight_vectors.push_back(std::move(v));
      ++found;
    }
  }
  if (found != primitive) throw NotATriple("ad h has non-integral weights on ker(ad x)");
  if (out.total_dim() != static_cast<int>(kDim)) throw InternalInconsistency("module dimensions do not add up to 6");
  return out;
}

std::string render_decomposition(const ModuleDecomposition& d) {
  std::map<int, int, std::greater<>> counts;
  for (int m : d.highest_weights) ++counts[m];
  std::string out;
  for (const auto& [m, count] : counts) {
    if (!out.empty()) out += " + ";
    if (count > 1) out += std::to_string(count) + "·";
    out += "V(" + std::to_string(m) + ")";
  }
  return out;
}

ExtensionCandidates extension_candidates(const Sl2Triple& t, int k) {
  if (k != 1 && k != 2) throw InvalidArgument("extension_candidates: k must be 1 or 2");
  const Element elems[] = {t.h(), t.x(), t.y()};
  return {k, centralizer(elems)};
}

Sl2Triple standard_triple(const Subalgebra& s) {
  if (s.dim() != 3 || s.is_solvable()) throw InvalidArgument("expected a 3-dimensional semisimple subalgebra");
  for (Factor f : {Factor::First, Factor::Second}) {
    if (factor_projection(s, f).dim() != 3) continue;
    // Solve proj_f(sum c_k b_k) = target for each standard basis element.
    const std::size_t o = f == Factor::First ? 0 : 3;
    Matrix m(3, 3);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t r = 0; r < 3; ++r) m(r, j) = s.basis()[j][o + r];
    auto preimage = [&](std::size_t target) {
      Matrix aug(3, 4);
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) aug(r, c) = m(r, c);
        aug(r, 3) = r == target ? Scalar(1) : Scalar();
      }
      Echelon e = rref(aug);
      Vector coords(3);
      for (std::size_t r = 0; r < 3; ++r) coords[r] = e.reduced(r, 3);
      return s.combination(coords);
    };
    return Sl2Triple(preimage(0), preimage(1), preimage(2));
  }
  throw InvalidArgument("no factor projection of the subalgebra is an isomorphism");
}

}  // namespace so4
