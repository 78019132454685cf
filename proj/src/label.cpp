#include "so4/label.hpp"

#include <array>
#include <cctype>
#include <utility>

#include "so4/errors.hpp"

namespace so4 {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int dim;
  bool solvable;
};

constexpr std::array kFamilies = {
    FamilyInfo{Family::Zero, "Zero", 0, true},
    FamilyInfo{Family::J1, "J1", 1, true},
    FamilyInfo{Family::J2, "J2", 1, true},
    FamilyInfo{Family::J3, "J3", 1, true},
    FamilyInfo{Family::J4, "J4", 1, true},
    FamilyInfo{Family::J5, "J5", 1, true},
    FamilyInfo{Family::J6, "J6", 1, true},
    FamilyInfo{Family::J7, "J7", 1, true},
    FamilyInfo{Family::J8, "J8", 1, true},
    FamilyInfo{Family::K1_1, "K1^1", 2, true},
    FamilyInfo{Family::K1_2, "K1^2", 2, true},
    FamilyInfo{Family::K1_3, "K1^3", 2, true},
    FamilyInfo{Family::K1_4, "K1^4", 2, true},
    FamilyInfo{Family::K2_1, "K2^1", 2, true},
    FamilyInfo{Family::K2_2, "K2^2", 2, true},
    FamilyInfo{Family::K2_3, "K2^3", 2, true},
    FamilyInfo{Family::K2_4, "K2^4", 2, true},
    FamilyInfo{Family::K2_5, "K2^5", 2, true},
    FamilyInfo{Family::L2_1, "L2^1", 3, true},
    FamilyInfo{Family::L3, "L3", 3, true},
    FamilyInfo{Family::L3_0_1, "L3,0^1", 3, true},
    FamilyInfo{Family::L3_0_2, "L3,0^2", 3, true},
    FamilyInfo{Family::L3_0_3, "L3,0^3", 3, true},
    FamilyInfo{Family::L3_0_4, "L3,0^4", 3, true},
    FamilyInfo{Family::L4_1, "L4^1", 3, true},
    FamilyInfo{Family::A1_1, "A1^1", 3, false},
    FamilyInfo{Family::A1_2, "A1^2", 3, false},
    FamilyInfo{Family::A1_3, "A1^3", 3, false},
    FamilyInfo{Family::M8_1, "M8^1", 4, true},
    FamilyInfo{Family::A1J_1, "(A1⊕J)^1", 4, false},
    FamilyInfo{Family::A1J_2, "(A1⊕J)^2", 4, false},
    FamilyInfo{Family::A1J_3, "(A1⊕J)^3", 4, false},
    FamilyInfo{Family::A1J_4, "(A1⊕J)^4", 4, false},
    FamilyInfo{Family::A1K2_1, "(A1⊕K2)^1", 5, false},
    FamilyInfo{Family::A1K2_2, "(A1⊕K2)^2", 5, false},
    FamilyInfo{Family::Full, "Full", 6, false},
};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi;
  throw InvalidLabel("unknown family");
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

}  // namespace

ClassLabel ClassLabel::discrete(Family f) {
  if (is_parametric(f)) throw InvalidLabel(std::string(info(f).name) + " needs a parameter");
  return ClassLabel(f, std::nullopt, 0);
}

ClassLabel ClassLabel::j8(Scalar a_squared) {
  if (a_squared.is_zero()) throw InvalidLabel("J8 requires a != 0");
  return ClassLabel(Family::J8, std::move(a_squared), 0);
}

ClassLabel ClassLabel::k2_2(Scalar a_squared) { return ClassLabel(Family::K2_2, std::move(a_squared), 0); }

ClassLabel ClassLabel::k2_4(Scalar a_squared) { return ClassLabel(Family::K2_4, std::move(a_squared), 0); }

ClassLabel ClassLabel::l3(Scalar a, int branch) {
  if (a.is_zero()) throw InvalidLabel("L3 with a = 0 is one of the four L3,0 classes");
  if (a == Scalar::fraction(-1, 4)) throw InvalidLabel("so(4,C) has no subalgebra isomorphic to L3,-1/4");
  if (branch != 1 && branch != 2) throw InvalidLabel("L3 branch must be 1 or 2");
  return ClassLabel(Family::L3, std::move(a), branch);
}

bool is_parametric(Family f) {
  return f == Family::J8 || f == Family::K2_2 || f == Family::K2_4 || f == Family::L3;
}

int family_dim(Family f) { return info(f).dim; }

bool family_is_solvable(Family f) { return info(f).solvable; }

std::string family_key(const ClassLabel& label) {
  if (label.family() == Family::L3) return "L3^" + std::to_string(label.branch());
  return info(label.family()).name;
}

std::string render_label(const ClassLabel& label) {
  std::string name = info(label.family()).name;
  switch (label.family()) {
    case Family::J8:
    case Family::K2_2:
    case Family::K2_4:
      return name + "[a^2=" + render_scalar(*label.param()) + "]";
    case Family::L3:
      return name + "[a=" + render_scalar(*label.param()) + ", branch=" + std::to_string(label.branch()) + "]";
    default:
      return name;
  }
}

ClassLabel parse_label(std::string_view text) {
  std::string s = strip_spaces(text);
  s = replace_all(s, "(A1+", "(A1⊕");
  std::string head = s;
  std::string args;
  if (auto open = s.find('['); open != std::string::npos) {
    if (s.back() != ']') throw ParseError("malformed label '" + std::string(text) + "'");
    head = s.substr(0, open);
    args = s.substr(open + 1, s.size() - open - 2);
  }
  for (const auto& fi : kFamilies) {
    if (head != fi.name) continue;
    if (!is_parametric(fi.family)) {
      if (!args.empty()) throw ParseError("label '" + head + "' takes no parameters");
      return ClassLabel::discrete(fi.family);
    }
    if (fi.family == Family::L3) {
      // a=<scalar>,branch=<1|2>
      auto comma = args.rfind(",branch=");
      if (args.rfind("a=", 0) != 0 || comma == std::string::npos) {
        throw ParseError("L3 label needs [a=..., branch=...]");
      }
      Scalar a = parse_scalar(args.substr(2, comma - 2));
      std::string b = args.substr(comma + 8);
      if (b != "1" && b != "2") throw ParseError("L3 branch must be 1 or 2");
      return ClassLabel::l3(a, b == "1" ? 1 : 2);
    }
    if (args.rfind("a^2=", 0) != 0) throw ParseError("label '" + head + "' needs [a^2=...]");
    Scalar a2 = parse_scalar(args.substr(4));
    if (fi.family == Family::J8) return ClassLabel::j8(a2);
    if (fi.family == Family::K2_2) return ClassLabel::k2_2(a2);
    return ClassLabel::k2_4(a2);
  }
  throw ParseError("unknown class label '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, const ClassLabel& label) { return os << render_label(label); }

ClassLabel swap_label(const ClassLabel& label) {
  static constexpr std::pair<Family, Family> kPairs[] = {
      {Family::J1, Family::J2},         {Family::J3, Family::J4},         {Family::J6, Family::J7},
      {Family::K1_2, Family::K1_3},     {Family::K2_3, Family::K2_5},     {Family::L3_0_1, Family::L3_0_3},
      {Family::L3_0_2, Family::L3_0_4}, {Family::A1_1, Family::A1_2},     {Family::A1J_1, Family::A1J_3},
      {Family::A1J_2, Family::A1J_4},   {Family::A1K2_1, Family::A1K2_2},
  };
  switch (label.family()) {
    case Family::J8:
      // <h1 + a h2> swaps to <a h1 + h2> = <h1 + a^-1 h2>.
      return ClassLabel::j8(label.param()->inverse());
    case Family::K2_2:
      return ClassLabel::k2_4(*label.param());
    case Family::K2_4:
      return ClassLabel::k2_2(*label.param());
    case Family::L3:
      return ClassLabel::l3(*label.param(), 3 - label.branch());
    default:
      break;
  }
  for (const auto& [a, b] : kPairs) {
    if (label.family() == a) return ClassLabel::discrete(b);
    if (label.family() == b) return ClassLabel::discrete(a);
  }
  return label;
}

}  // namespace so4
