// so4: classify subalgebras of so(4,C) up to inner automorphism.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "so4/catalog.hpp"
#include "so4/classify.hpp"
#include "so4/conjugacy.hpp"
#include "so4/document.hpp"
#include "so4/errors.hpp"
#include "so4/modulerep.hpp"
#include "so4/verify.hpp"

namespace {

using nlohmann::json;
using namespace so4;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

// Thrown for problems with files and arguments; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Subalgebra load_subalgebra(const std::string& path) {
  SubalgebraDocument doc = parse_document(read_input(path));
  try {
    return Subalgebra::span_close(doc.basis);
  } catch (const NotClosed& e) {
    const Element& u = doc.basis.at(e.first());
    const Element& v = doc.basis.at(e.second());
    throw InputError(path + ": not closed under the bracket: [" + render_element(u) + ", " + render_element(v) +
                     "] = " + render_element(bracket(u, v)) + " is outside the span");
  }
}

json element_row(const Element& e) {
  json row = json::array();
  for (const auto& c : e.coeffs()) row.push_back(render_scalar(c));
  return row;
}

json element_rows(const std::vector<Element>& es) {
  json rows = json::array();
  for (const auto& e : es) rows.push_back(element_row(e));
  return rows;
}

json mat2_json(const Mat2& m) {
  return json::array({json::array({render_scalar(m.a), render_scalar(m.b)}),
                      json::array({render_scalar(m.c), render_scalar(m.d)})});
}

std::string mat2_text(const Mat2& m) {
  return "[[" + render_scalar(m.a) + ", " + render_scalar(m.b) + "], [" + render_scalar(m.c) + ", " +
         render_scalar(m.d) + "]]";
}

std::string join_elements(const std::vector<Element>& es) {
  std::string out = "<";
  for (std::size_t k = 0; k < es.size(); ++k) out += (k ? ", " : "") + render_element(es[k]);
  return out + ">";
}

int cmd_classify(const std::string& path, bool as_json) {
  const Subalgebra s = load_subalgebra(path);
  const ClassLabel label = classify(s);
  std::optional<Subalgebra> levi, rad;
  if (s.dim() > 0 && !s.is_solvable()) {
    levi = levi_factor(s);
    rad = radical(s);
  }
  if (as_json) {
    json out{{"label", render_label(label)},
             {"family", family_key(label)},
             {"dim", s.dim()},
             {"solvable", s.is_solvable()},
             {"derived_dims", s.derived_dims()},
             {"basis", element_rows(s.basis())}};
    if (levi) {
      out["levi"] = {{"levi_factor", element_rows(levi->basis())}, {"radical", element_rows(rad->basis())}};
    } else {
      out["levi"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << render_label(label) << "\n";
  std::cout << "  dim: " << s.dim() << "\n";
  std::cout << "  solvable: " << (s.is_solvable() ? "yes" : "no") << "\n";
  std::cout << "  derived series dims:";
  for (int d : s.derived_dims()) std::cout << " " << d;
  std::cout << "\n  basis: " << join_elements(s.basis()) << "\n";
  if (levi) {
    std::cout << "  levi factor: " << join_elements(levi->basis()) << "\n";
    std::cout << "  radical: " << join_elements(rad->basis()) << "\n";
  }
  return kExitOk;
}

int cmd_equivalent(const std::string& path_a, const std::string& path_b, int budget, bool as_json) {
  const Subalgebra a = load_subalgebra(path_a);
  const Subalgebra b = load_subalgebra(path_b);
  const ClassLabel la = classify(a);
  const ClassLabel lb = classify(b);
  const bool same = la == lb;
  std::optional<InnerAutomorphism> witness;
  if (same && budget > 0) witness = find_witness(a, b, budget);
  if (as_json) {
    json out{{"equivalent", same}, {"labels", {render_label(la), render_label(lb)}}};
    if (witness) {
      out["witness"] = {{"first", mat2_json(witness->first())}, {"second", mat2_json(witness->second())}};
    } else {
      out["witness"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << (same ? "equivalent" : "inequivalent") << ": " << render_label(la) << " vs " << render_label(lb)
            << "\n";
  if (witness) {
    std::cout << "  witness: (" << mat2_text(witness->first()) << ", " << mat2_text(witness->second()) << ")\n";
  } else if (same && budget > 0) {
    std::cout << "  no witness within budget " << budget << "\n";
  }
  return kExitOk;
}

int cmd_conjugate(const std::string& path, std::uint64_t seed, int complexity) {
  if (complexity < 1) throw InputError("--complexity must be at least 1");
  const Subalgebra s = load_subalgebra(path);
  const InnerAutomorphism phi = random_inner(seed, complexity);
  const Subalgebra image = apply(phi, s);
  json out = json::parse(render_document(document_of(image)));
  out["automorphism"] = {{"first", mat2_json(phi.first())}, {"second", mat2_json(phi.second())}};
  out["seed"] = seed;
  out["complexity"] = complexity;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_decompose(const std::string& path, bool as_json) {
  const Subalgebra s = load_subalgebra(path);
  if (s.dim() != 3 || s.is_solvable()) throw InputError("decompose needs a 3-dimensional semisimple subalgebra");
  const Sl2Triple t = standard_triple(s);
  const ModuleDecomposition d = adjoint_decompose(t);
  if (as_json) {
    json summands = json::array();
    for (std::size_t k = 0; k < d.highest_weights.size(); ++k) {
      summands.push_back({{"highest_weight", d.highest_weights[k]},
                          {"dim", d.highest_weights[k] + 1},
                          {"vector", element_row(d.highest_weight_vectors[k])}});
    }
    json out{{"label", render_label(classify(s))},
             {"decomposition", render_decomposition(d)},
             {"triple", element_rows({t.h(), t.x(), t.y()})},
             {"summands", summands}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << render_decomposition(d) << "\n";
  std::cout << "  triple: h = " << render_element(t.h()) << ", x = " << render_element(t.x())
            << ", y = " << render_element(t.y()) << "\n";
  for (std::size_t k = 0; k < d.highest_weights.size(); ++k) {
    std::cout << "  V(" << d.highest_weights[k] << "): " << render_element(d.highest_weight_vectors[k]) << "\n";
  }
  return kExitOk;
}

int cmd_verify_tables(int trials, std::uint64_t seed, int complexity, const std::string& catalog_path, bool as_json) {
  if (trials < 0) throw InputError("--trials must be non-negative");
  if (complexity < 1) throw InputError("--complexity must be at least 1");
  std::vector<Representative> owned;
  if (!catalog_path.empty()) owned = load_catalog(read_input(catalog_path));
  const auto& catalog = catalog_path.empty() ? enumerate_catalog() : owned;

  const VerifyReport report = verify_tables(catalog, {trials, seed, complexity});
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"passed", c.passed()},
                        {"cases", c.cases},
                        {"failure_count", c.failure_count},
                        {"failures", c.failures}});
    }
    json counts = json::object();
    for (const auto& [dim, keys] : report.families_by_dim) counts[std::to_string(dim)] = keys;
    json out{{"passed", report.passed()},
             {"seed", seed},
             {"trials", trials},
             {"complexity", complexity},
             {"entries", catalog.size()},
             {"families_by_dim", counts},
             {"checks", checks}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "catalog entries: " << catalog.size() << " (seed " << seed << ", trials " << trials
              << ", complexity " << complexity << ")\n";
    for (const auto& [dim, keys] : report.families_by_dim) {
      std::cout << "  dim " << dim << ": " << keys.size() << " families:";
      for (const auto& k : keys) std::cout << " " << k;
      std::cout << "\n";
    }
    for (const auto& c : report.checks) {
      std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
      if (!c.passed()) std::cout << ", " << c.failure_count << " failed";
      std::cout << ")\n";
      for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    }
  }
  return report.passed() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify subalgebras of so(4,C) up to inner automorphism"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file_a, file_b, catalog_path;
  std::uint64_t seed = 0;
  int complexity = 3;
  int trials = 200;
  int budget = 200;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a subalgebra document");
  classify_cmd->add_option("file", file_a, "Subalgebra document ('-' for stdin)")->required();

  auto* equivalent_cmd = app.add_subcommand("equivalent", "Decide equivalence of two subalgebras");
  equivalent_cmd->add_option("a", file_a, "First document")->required();
  equivalent_cmd->add_option("b", file_b, "Second document")->required();
  equivalent_cmd->add_option("--witness-budget", budget, "Candidates tried when searching for a witness (0 disables)")
      ->capture_default_str();

  auto* conjugate_cmd = app.add_subcommand("conjugate", "Apply a seeded random inner automorphism");
  conjugate_cmd->add_option("file", file_a, "Subalgebra document")->required();
  conjugate_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  conjugate_cmd->add_option("--complexity", complexity, "Unipotent factors per sl2 factor")->capture_default_str();

  auto* decompose_cmd = app.add_subcommand("decompose", "Adjoint module decomposition over an sl2 subalgebra");
  decompose_cmd->add_option("file", file_a, "Subalgebra document")->required();

  auto* verify_cmd = app.add_subcommand("verify-tables", "Check the classification tables");
  verify_cmd->add_option("--trials", trials, "Random conjugates per catalog entry")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "First seed")->capture_default_str();
  verify_cmd->add_option("--complexity", complexity, "Conjugation complexity")->capture_default_str();
  verify_cmd->add_option("--catalog", catalog_path, "Catalog JSON to check instead of the built-in one");

  for (auto* sub : {classify_cmd, equivalent_cmd, conjugate_cmd, decompose_cmd, verify_cmd}) {
    sub->add_flag("--json", as_json, "Machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(file_a, as_json);
    if (*equivalent_cmd) return cmd_equivalent(file_a, file_b, budget, as_json);
    if (*conjugate_cmd) return cmd_conjugate(file_a, seed, complexity);
    if (*decompose_cmd) return cmd_decompose(file_a, as_json);
    if (*verify_cmd) return cmd_verify_tables(trials, seed, complexity, catalog_path, as_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitInput;
}
