#include "so4/conjugacy.hpp"

#include <random>
#include <vector>

#include "so4/classify.hpp"
#include "so4/errors.hpp"

namespace so4 {

namespace {

FactorComponent conjugate(const Mat2& g, const FactorComponent& c) {
  return FactorComponent(g * c.matrix() * g.unimodular_inverse());
}

// Uniform-ish draw in [lo, hi]; mt19937_64 output is fully specified, so
// results are identical across platforms.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

Scalar random_entry(std::mt19937_64& rng, int height) {
  for (;;) {
    Scalar re = Scalar::fraction(draw(rng, -height, height), draw(rng, 1, height));
    // Real entries half of the time; keeps coefficient growth moderate.
    Scalar im = (rng() & 1U) != 0U ? Scalar::fraction(draw(rng, -height, height), draw(rng, 1, height)) : Scalar();
    Scalar t = re + im * Scalar::i();
    if (!t.is_zero()) return t;
  }
}

Mat2 random_unipotent_product(std::mt19937_64& rng, int complexity, int height) {
  Mat2 g = Mat2::identity();
  bool upper = (rng() & 1U) != 0U;
  for (int k = 0; k < complexity; ++k) {
    Scalar t = random_entry(rng, height);
    Mat2 e = upper ? Mat2{1, t, 0, 1} : Mat2{1, 0, t, 1};
    g = g * e;
    upper = !upper;
  }
  return g;
}

std::vector<InnerAutomorphism> deterministic_moves() {
  const Mat2 id = Mat2::identity();
  const Mat2 weyl{0, 1, -1, 0};
  std::vector<InnerAutomorphism> moves = {
      InnerAutomorphism(id, id),
      InnerAutomorphism(id, weyl),
      InnerAutomorphism(weyl, id),
      InnerAutomorphism(weyl, weyl),
  };
  for (const Scalar& lambda : {Scalar(2), Scalar::i()}) {
    Mat2 torus{lambda, 0, 0, lambda.inverse()};
    moves.emplace_back(torus, id);
    moves.emplace_back(id, torus);
    moves.emplace_back(torus, torus);
  }
  return moves;
}

}  // namespace

InnerAutomorphism::InnerAutomorphism(Mat2 first, Mat2 second) : a_(std::move(first)), b_(std::move(second)) {
  if (a_.det() != Scalar(1) || b_.det() != Scalar(1)) {
    throw InvalidArgument("inner automorphism factors must have determinant 1");
  }
}

InnerAutomorphism InnerAutomorphism::compose(const InnerAutomorphism& other) const {
  return InnerAutomorphism(a_ * other.a_, b_ * other.b_);
}

InnerAutomorphism InnerAutomorphism::inverse() const {
  return InnerAutomorphism(a_.unimodular_inverse(), b_.unimodular_inverse());
}

Element apply(const InnerAutomorphism& phi, const Element& u) {
  return embed(conjugate(phi.first(), component(u, Factor::First)), Factor::First) +
         embed(conjugate(phi.second(), component(u, Factor::Second)), Factor::Second);
}

Subalgebra apply(const InnerAutomorphism& phi, const Subalgebra& s) {
  std::vector<Element> images;
  images.reserve(s.basis().size());
  for (const auto& b : s.basis()) images.push_back(apply(phi, b));
  return Subalgebra::span_close(images);
}

InnerAutomorphism random_inner(std::uint64_t seed, int complexity, RandomInnerOptions options) {
  if (complexity < 1) throw InvalidArgument("random_inner: complexity must be at least 1");
  if (options.height < 1) throw InvalidArgument("random_inner: height must be at least 1");
  std::mt19937_64 rng(seed);
  Mat2 a = random_unipotent_product(rng, complexity, options.height);
  Mat2 b = random_unipotent_product(rng, complexity, options.height);
  return InnerAutomorphism(a, b);
}

Element factor_swap(const Element& u) { return Element(u[H2], u[X2], u[Y2], u[H1], u[X1], u[Y1]); }

Subalgebra factor_swap(const Subalgebra& s) {
  std::vector<Element> images;
  for (const auto& b : s.basis()) images.push_back(factor_swap(b));
  return Subalgebra::span_close(images);
}

bool equivalent(const Subalgebra& s, const Subalgebra& t) {
  return s.dim() == t.dim() && classify(s) == classify(t);
}

std::optional<InnerAutomorphism> find_witness(const Subalgebra& s, const Subalgebra& t, int budget) {
  if (budget <= 0 || s.dim() != t.dim()) return std::nullopt;
  int spent = 0;
  auto try_candidate = [&](const InnerAutomorphism& phi) -> bool {
    ++spent;
    return apply(phi, s) == t;
  };

  const auto moves = deterministic_moves();
  for (const auto& phi : moves) {
    if (try_candidate(phi)) return phi;
    if (spent >= budget) return std::nullopt;
  }
  for (std::uint64_t n = 0;; ++n) {
    for (int c = 1; c <= 3; ++c) {
      InnerAutomorphism base = random_inner(n, c);
      for (std::size_t w = 0; w < 4; ++w) {
        InnerAutomorphism phi = moves[w].compose(base);
        if (try_candidate(phi)) return phi;
        if (spent >= budget) return std::nullopt;
      }
    }
  }
}

}  // namespace so4
