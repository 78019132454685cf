#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "so4/scalar.hpp"

namespace so4 {

/// Every class of subalgebras of so(4,C) up to inner automorphism.
enum class Family {
  Zero,
  J1, J2, J3, J4, J5, J6, J7, J8,
  K1_1, K1_2, K1_3, K1_4,
  K2_1, K2_2, K2_3, K2_4, K2_5,
  L2_1, L3, L3_0_1, L3_0_2, L3_0_3, L3_0_4, L4_1,
  A1_1, A1_2, A1_3,
  M8_1,
  A1J_1, A1J_2, A1J_3, A1J_4,
  A1K2_1, A1K2_2,
  Full,
};

/// A class label with its exact parameter payload.
///
/// J8, K2_2 and K2_4 carry a^2 (a and -a name the same class); L3 carries a
/// and the branch index. All other families carry nothing. Instances are
/// created through the factories, which enforce these rules.
class ClassLabel {
 public:
  static ClassLabel discrete(Family f);
  /// J^{8,a} from a^2 (must be nonzero).
  static ClassLabel j8(Scalar a_squared);
  static ClassLabel k2_2(Scalar a_squared);
  static ClassLabel k2_4(Scalar a_squared);
  /// L^{branch}_{3,a}; a must avoid 0 and -1/4, branch must be 1 or 2.
  static ClassLabel l3(Scalar a, int branch);

  Family family() const noexcept { return family_; }
  const std::optional<Scalar>& param() const noexcept { return param_; }
  int branch() const noexcept { return branch_; }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;

 private:
  ClassLabel(Family f, std::optional<Scalar> p, int branch) : family_(f), param_(std::move(p)), branch_(branch) {}

  Family family_ = Family::Zero;
  std::optional<Scalar> param_;
  int branch_ = 0;
};

bool is_parametric(Family f);
int family_dim(Family f);
bool family_is_solvable(Family f);

/// Name without parameters, e.g. "J5", "K2^2", "L3,0^1", "(A1+J)^2".
/// L3 branches are reported as "L3^1" / "L3^2".
std::string family_key(const ClassLabel& label);

/// "J5", "J8[a^2=9]", "L3[a=-3/16, branch=1]", "(A1⊕J)^2", ...
std::string render_label(const ClassLabel& label);
/// Inverse of render_label. "(A1+J)^i" and "(A1+K2)^i" are accepted too.
ClassLabel parse_label(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ClassLabel& label);

/// Label of the image under the outer factor swap (h1<->h2, x1<->x2, y1<->y2).
/// J8 keeps its family but a^2 becomes 1/a^2.
ClassLabel swap_label(const ClassLabel& label);

}  // namespace so4
