#include "so4/catalog.hpp"

#include <json.hpp>

#include "so4/errors.hpp"

namespace so4 {

// Defined in the generated embedded_catalog.cpp.
extern const std::string_view kEmbeddedCatalogJson;

namespace {

using nlohmann::json;

// Relations exactly as de Graaf states them: [z_i, z_j] = sum c_k z_k, 1-based.
struct Relation {
  int i;
  int j;
  std::vector<Scalar> coeffs;
};

std::vector<Relation> relations(const AbstractSolvableType& t) {
  switch (t.name) {
    case SolvableName::J:
    case SolvableName::K1:
    case SolvableName::L1:
      return {};
    case SolvableName::K2:
      return {{1, 2, {1, 0}}};
    case SolvableName::L2:
      return {{3, 1, {1, 0, 0}}, {3, 2, {0, 1, 0}}};
    case SolvableName::L3:
      return {{3, 1, {0, 1, 0}}, {3, 2, {*t.a, 1, 0}}};
    case SolvableName::L4:
      return {{3, 1, {0, 1, 0}}, {3, 2, {1, 0, 0}}};
    case SolvableName::L5:
      return {{3, 1, {0, 1, 0}}};
    case SolvableName::M8:
      return {{1, 2, {0, 1, 0, 0}}, {3, 4, {0, 0, 0, 1}}};
  }
  return {};
}

Element h1() { return Element::h1(); }
Element x1() { return Element::x1(); }
Element y1() { return Element::y1(); }
Element h2() { return Element::h2(); }
Element x2() { return Element::x2(); }
Element y2() { return Element::y2(); }

Representative make(ClassLabel label, std::vector<Element> gens, std::string notes) {
  return {std::move(label), std::move(gens), std::move(notes)};
}

Scalar root_of_square(const Scalar& a_squared, const std::string& what) {
  auto a = exact_sqrt(a_squared);
  if (!a) {
    throw NonconstructibleOverField(what + ": a^2 = " + render_scalar(a_squared) + " has no square root in Q(i)");
  }
  return *a;
}

std::size_t center_dim(const Subalgebra& s) {
  const auto n = static_cast<std::size_t>(s.dim());
  Matrix m(n * n, n);
  for (std::size_t e = 0; e < n; ++e) {
    Matrix ad = ad_matrix(s, s.basis()[e]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(e * n + r, c) = ad(r, c);
  }
  return nullspace(m).size();
}

json scalar_row(const Element& e) {
  json row = json::array();
  for (const auto& c : e.coeffs()) row.push_back(render_scalar(c));
  return row;
}

}  // namespace

int AbstractSolvableType::dim() const {
  switch (name) {
    case SolvableName::J:
      return 1;
    case SolvableName::K1:
    case SolvableName::K2:
      return 2;
    case SolvableName::M8:
      return 4;
    default:
      return 3;
  }
}

std::vector<StructureConstant> AbstractSolvableType::structure_constants() const {
  std::vector<StructureConstant> out;
  for (auto& r : relations(*this)) out.push_back({r.i - 1, r.j - 1, std::move(r.coeffs)});
  return out;
}

std::string render_abstract_type(const AbstractSolvableType& t) {
  static constexpr const char* kNames[] = {"J", "K1", "K2", "L1", "L2", "L3", "L4", "L5", "M8"};
  std::string name = kNames[static_cast<int>(t.name)];
  if (t.name == SolvableName::L3) name += "(a=" + render_scalar(*t.a) + ")";
  return name;
}

std::vector<std::vector<std::vector<Scalar>>> structure_table(const AbstractSolvableType& t) {
  const auto n = static_cast<std::size_t>(t.dim());
  std::vector<std::vector<std::vector<Scalar>>> table(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
  for (const auto& sc : t.structure_constants()) {
    for (std::size_t k = 0; k < n; ++k) {
      table[sc.i][sc.j][k] = sc.coeffs[k];
      table[sc.j][sc.i][k] = -sc.coeffs[k];
    }
  }
  return table;
}

bool satisfies_jacobi(const AbstractSolvableType& t) {
  const auto n = static_cast<std::size_t>(t.dim());
  auto table = structure_table(t);
  auto br = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (u[i].is_zero() || v[j].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] += u[i] * v[j] * table[i][j][k];
      }
    return out;
  };
  auto unit = [&](std::size_t k) {
    std::vector<Scalar> v(n);
    v[k] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        if (table[i][j][k] != -table[j][i][k]) return false;
      for (std::size_t k = 0; k < n; ++k) {
        auto a = br(unit(i), br(unit(j), unit(k)));
        auto b = br(unit(j), br(unit(k), unit(i)));
        auto c = br(unit(k), br(unit(i), unit(j)));
        for (std::size_t m = 0; m < n; ++m)
          if (!(a[m] + b[m] + c[m]).is_zero()) return false;
      }
    }
  return true;
}

AbstractSolvableType abstract_type_of(const Subalgebra& s) {
  if (s.dim() < 1 || s.dim() > 4) {
    throw UnsupportedDim("abstract_type_of supports dimensions 1..4, got " + std::to_string(s.dim()));
  }
  if (!s.is_solvable()) throw NotSolvable("abstract_type_of: subalgebra is not solvable");
  const int derived_dim = s.derived_dims()[1];

  switch (s.dim()) {
    case 1:
      return {SolvableName::J, std::nullopt};
    case 2:
      return {derived_dim == 0 ? SolvableName::K1 : SolvableName::K2, std::nullopt};
    case 4:
      if (derived_dim == 2 && center_dim(s) == 0) return {SolvableName::M8, std::nullopt};
      throw UnsupportedDim("4-dimensional solvable type other than M8 is not encoded");
    default:
      break;
  }

  if (derived_dim == 0) return {SolvableName::L1, std::nullopt};
  Subalgebra d = derived_algebra(s);
  if (derived_dim == 1) {
    const Element& n = d.basis()[0];
    for (const auto& b : s.basis()) {
      if (!bracket(b, n).is_zero()) return {SolvableName::L3, Scalar()};
    }
    return {SolvableName::L5, std::nullopt};
  }

  // derived_dim == 2: act with any element outside d on d.
  const Element* t = nullptr;
  for (const auto& b : s.basis()) {
    if (!d.contains(b)) {
      t = &b;
      break;
    }
  }
  Matrix m = ad_matrix(d, *t);
  Scalar trace = m.trace();
  Scalar det = determinant(m);
  if (trace.is_zero()) return {SolvableName::L4, std::nullopt};
  Scalar a = -det / (trace * trace);
  if (a == Scalar::fraction(-1, 4)) {
    // Repeated eigenvalue trace/2: L2 iff ad t acts as a scalar.
    bool scalar_action = m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1);
    if (scalar_action) return {SolvableName::L2, std::nullopt};
  }
  return {SolvableName::L3, a};
}

std::optional<AbstractSolvableType> implied_abstract_type(const ClassLabel& label) {
  switch (label.family()) {
    case Family::J1:
    case Family::J2:
    case Family::J3:
    case Family::J4:
    case Family::J5:
    case Family::J6:
    case Family::J7:
    case Family::J8:
      return AbstractSolvableType{SolvableName::J, std::nullopt};
    case Family::K1_1:
    case Family::K1_2:
    case Family::K1_3:
    case Family::K1_4:
      return AbstractSolvableType{SolvableName::K1, std::nullopt};
    case Family::K2_1:
    case Family::K2_2:
    case Family::K2_3:
    case Family::K2_4:
    case Family::K2_5:
      return AbstractSolvableType{SolvableName::K2, std::nullopt};
    case Family::L2_1:
      return AbstractSolvableType{SolvableName::L2, std::nullopt};
    case Family::L3:
      return AbstractSolvableType{SolvableName::L3, *label.param()};
    case Family::L3_0_1:
    case Family::L3_0_2:
    case Family::L3_0_3:
    case Family::L3_0_4:
      return AbstractSolvableType{SolvableName::L3, Scalar()};
    case Family::L4_1:
      return AbstractSolvableType{SolvableName::L4, std::nullopt};
    case Family::M8_1:
      return AbstractSolvableType{SolvableName::M8, std::nullopt};
    default:
      return std::nullopt;
  }
}

Representative representative_of(const ClassLabel& label) {
  switch (label.family()) {
    case Family::J8:
      return representative_of(label, root_of_square(*label.param(), "J8"));
    case Family::K2_2:
      return representative_of(label, root_of_square(*label.param(), "K2^2"));
    case Family::K2_4:
      return representative_of(label, root_of_square(*label.param(), "K2^4"));
    default:
      break;
  }
  const auto F = label.family();
  using enum Family;
  switch (F) {
    case Zero: return make(label, {}, "zero subalgebra");
    case J1: return make(label, {x1()}, "nilpotent line in factor 1");
    case J2: return make(label, {x2()}, "nilpotent line in factor 2");
    case J3: return make(label, {h1()}, "semisimple line in factor 1");
    case J4: return make(label, {h2()}, "semisimple line in factor 2");
    case J5: return make(label, {x1() + x2()}, "nilpotent in both factors");
    case J6: return make(label, {x1() + h2()}, "nilpotent + semisimple");
    case J7: return make(label, {h1() + x2()}, "semisimple + nilpotent");
    case K1_1: return make(label, {x1(), x2()}, "abelian, nilpotent lines in both factors");
    case K1_2: return make(label, {x1(), h2()}, "abelian, nilpotent + semisimple");
    case K1_3: return make(label, {h1(), x2()}, "abelian, semisimple + nilpotent");
    case K1_4: return make(label, {h1(), h2()}, "abelian, Cartan subalgebra");
    case K2_1: return make(label, {x1() + x2(), h1() + h2()}, "non-abelian, diagonal derived line");
    case K2_3: return make(label, {x1(), h1() + x2()}, "non-abelian, derived line in factor 1");
    case K2_5: return make(label, {x2(), h2() + x1()}, "non-abelian, derived line in factor 2");
    case L2_1: return make(label, {x1(), x2(), h1() + h2()}, "L2");
    case L3_0_1: return make(label, {h1(), x2(), h2()}, "L3,0 with derived line in factor 2");
    case L3_0_2: return make(label, {x1(), x2(), h2()}, "L3,0 with derived line in factor 2");
    case L3_0_3: return make(label, {x1(), h1(), h2()}, "L3,0 with derived line in factor 1");
    case L3_0_4: return make(label, {x1(), h1(), x2()}, "L3,0 with derived line in factor 1");
    case L4_1: return make(label, {x1(), x2(), h1() - h2()}, "L4");
    case A1_1: return make(label, {h1(), x1(), y1()}, "first sl2 factor");
    case A1_2: return make(label, {h2(), x2(), y2()}, "second sl2 factor");
    case A1_3: return make(label, {h1() + h2(), x1() + x2(), y1() + y2()}, "diagonal sl2");
    case M8_1: return make(label, {x1(), x2(), h1(), h2()}, "Borel subalgebra");
    case A1J_1: return make(label, {x1(), y1(), h1(), h2()}, "A1^1 + semisimple line");
    case A1J_2: return make(label, {x1(), y1(), h1(), x2()}, "A1^1 + nilpotent line");
    case A1J_3: return make(label, {x2(), y2(), h2(), h1()}, "A1^2 + semisimple line");
    case A1J_4: return make(label, {x2(), y2(), h2(), x1()}, "A1^2 + nilpotent line");
    case A1K2_1: return make(label, {x1(), y1(), h1(), x2(), h2()}, "A1^1 + Borel of factor 2");
    case A1K2_2: return make(label, {x2(), y2(), h2(), x1(), h1()}, "A1^2 + Borel of factor 1");
    case Full: return make(label, {h1(), x1(), y1(), h2(), x2(), y2()}, "so(4,C)");
    case L3: {
      const Scalar& a = *label.param();
      auto r = exact_sqrt(Scalar(1) + Scalar(4) * a);
      if (!r) {
        throw NonconstructibleOverField("L3: sqrt(1+4a) with a = " + render_scalar(a) + " is not in Q(i)");
      }
      Scalar plus = Scalar(1) + *r;
      Scalar minus = Scalar(1) - *r;
      if (label.branch() == 2) std::swap(plus, minus);
      return make(label, {x1(), x2(), plus * h1() + minus * h2()},
                  label.branch() == 1 ? "<x1, x2, (1+r)h1 + (1-r)h2>, r = sqrt(1+4a)"
                                      : "<x1, x2, (1-r)h1 + (1+r)h2>, r = sqrt(1+4a)");
    }
    default:
      throw InvalidLabel("no representative for " + render_label(label));
  }
}

Representative representative_of(const ClassLabel& label, const Scalar& a) {
  if (!label.param() || label.family() == Family::L3 || a * a != *label.param()) {
    throw InvalidArgument("explicit a must satisfy a^2 = param of a J8/K2^2/K2^4 label");
  }
  switch (label.family()) {
    case Family::J8:
      return make(label, {h1() + a * h2()}, "<h1 + a h2>");
    case Family::K2_2:
      return make(label, {x1(), h1() + a * h2()}, "<x1, h1 + a h2>");
    default:
      return make(label, {x2(), h2() + a * h1()}, "<x2, h2 + a h1>");
  }
}

const std::vector<Scalar>& parameter_samples() {
  static const std::vector<Scalar> samples = {
      1, -1, 2, -2, Scalar::fraction(1, 2), Scalar::fraction(-1, 2), Scalar::fraction(3, 16),
      Scalar::fraction(-3, 16), Scalar::i(), Scalar(1) + Scalar::i(),
  };
  return samples;
}

std::vector<Representative> build_catalog() {
  std::vector<Representative> out;
  auto squares_seen = [](std::vector<Scalar>& seen, const Scalar& sq) {
    for (const auto& s : seen)
      if (s == sq) return true;
    seen.push_back(sq);
    return false;
  };
  for (int k = static_cast<int>(Family::Zero); k <= static_cast<int>(Family::Full); ++k) {
    const auto f = static_cast<Family>(k);
    if (f == Family::Zero) continue;
    if (!is_parametric(f)) {
      out.push_back(representative_of(ClassLabel::discrete(f)));
      continue;
    }
    if (f == Family::L3) {
      for (const auto& a : parameter_samples()) {
        if (a.is_zero() || a == Scalar::fraction(-1, 4) || !exact_sqrt(Scalar(1) + Scalar(4) * a)) continue;
        for (int branch : {1, 2}) out.push_back(representative_of(ClassLabel::l3(a, branch)));
      }
      continue;
    }
    std::vector<Scalar> seen;
    std::vector<Scalar> values = {Scalar()};
    values.insert(values.end(), parameter_samples().begin(), parameter_samples().end());
    for (const auto& a : values) {
      if (squares_seen(seen, a * a)) continue;
      if (f == Family::J8) {
        if (a.is_zero()) continue;  // J8 at a = 0 is J3
        out.push_back(representative_of(ClassLabel::j8(a * a), a));
      } else {
        const auto label = f == Family::K2_2 ? ClassLabel::k2_2(a * a) : ClassLabel::k2_4(a * a);
        out.push_back(representative_of(label, a));
      }
    }
  }
  return out;
}

const std::vector<Representative>& enumerate_catalog() {
  static const std::vector<Representative> entries = load_catalog(kEmbeddedCatalogJson);
  return entries;
}

std::vector<Representative> load_catalog(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format_version").get<std::string>() != kCatalogFormatVersion) {
      throw ParseError("unsupported catalog format_version");
    }
    std::vector<Representative> out;
    for (const auto& entry : doc.at("entries")) {
      Representative rep{parse_label(entry.at("label").get<std::string>()), {}, entry.value("notes", "")};
      for (const auto& row : entry.at("generators")) {
        if (!row.is_array() || row.size() != kDim) throw ParseError("catalog generator needs 6 coordinates");
        Element e;
        for (std::size_t k = 0; k < kDim; ++k) e[k] = parse_scalar(row[k].get<std::string>());
        rep.generators.push_back(std::move(e));
      }
      out.push_back(std::move(rep));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed catalog: ") + e.what());
  }
}

std::string dump_catalog(const std::vector<Representative>& entries) {
  json doc;
  doc["format_version"] = kCatalogFormatVersion;
  doc["coordinates"] = {"h1", "x1", "y1", "h2", "x2", "y2"};
  json samples = json::array();
  for (const auto& s : parameter_samples()) samples.push_back(render_scalar(s));
  doc["parameter_samples"] = samples;
  json list = json::array();
  for (const auto& rep : entries) {
    json gens = json::array();
    for (const auto& g : rep.generators) gens.push_back(scalar_row(g));
    list.push_back({{"label", render_label(rep.label)},
                    {"dim", family_dim(rep.label.family())},
                    {"generators", gens},
                    {"notes", rep.notes}});
  }
  doc["entries"] = list;
  return doc.dump(2) + "\n";
}

}  // namespace so4
