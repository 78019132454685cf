#include "so4/verify.hpp"

#include <optional>

#include "so4/classify.hpp"
#include "so4/conjugacy.hpp"
#include "so4/errors.hpp"

namespace so4 {

namespace {

constexpr std::size_t kKeptFailures = 10;

void fail(CheckResult& r, std::string message) {
  ++r.failure_count;
  if (r.failures.size() < kKeptFailures) r.failures.push_back(std::move(message));
}

// Classifies with errors turned into a failure message.
std::optional<ClassLabel> try_classify(const Subalgebra& s, CheckResult& r, const std::string& context) {
  try {
    return classify(s);
  } catch (const Error& e) {
    fail(r, context + ": " + e.what());
    return std::nullopt;
  }
}

bool forbidden_abstract_type(const Subalgebra& s) {
  if (!s.is_solvable()) return false;
  if (s.dim() >= 5) return true;
  if (s.dim() == 0) return false;
  const auto t = abstract_type_of(s);
  return t.name == SolvableName::L1 || t.name == SolvableName::L5 ||
         (t.name == SolvableName::L3 && t.a == Scalar::fraction(-1, 4));
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

const std::map<int, std::set<std::string>>& expected_families_by_dim() {
  static const std::map<int, std::set<std::string>> expected = {
      {1, {"J1", "J2", "J3", "J4", "J5", "J6", "J7", "J8"}},
      {2, {"K1^1", "K1^2", "K1^3", "K1^4", "K2^1", "K2^2", "K2^3", "K2^4", "K2^5"}},
      {3, {"L2^1", "L3^1", "L3^2", "L3,0^1", "L3,0^2", "L3,0^3", "L3,0^4", "L4^1", "A1^1", "A1^2", "A1^3"}},
      {4, {"M8^1", "(A1⊕J)^1", "(A1⊕J)^2", "(A1⊕J)^3", "(A1⊕J)^4"}},
      {5, {"(A1⊕K2)^1", "(A1⊕K2)^2"}},
      {6, {"Full"}},
  };
  return expected;
}

VerifyReport verify_tables(const std::vector<Representative>& catalog, const VerifyOptions& options) {
  VerifyReport report;

  // Spans are computed once; a non-closed entry is reported and skipped.
  CheckResult self{"self-classification"};
  std::vector<std::optional<Subalgebra>> spans;
  std::vector<std::optional<ClassLabel>> found;
  for (const auto& rep : catalog) {
    ++self.cases;
    const std::string name = render_label(rep.label);
    std::optional<Subalgebra> s;
    try {
      s = Subalgebra::span_close(rep.generators);
    } catch (const Error& e) {
      fail(self, name + ": " + e.what());
    }
    std::optional<ClassLabel> got;
    if (s) got = try_classify(*s, self, name);
    if (got && !(*got == rep.label)) fail(self, name + ": classified as " + render_label(*got));
    if (s && s->dim() != family_dim(rep.label.family())) fail(self, name + ": wrong dimension");
    spans.push_back(std::move(s));
    found.push_back(std::move(got));
  }
  report.checks.push_back(self);

  CheckResult counts{"family counts"};
  for (const auto& rep : catalog) report.families_by_dim[family_dim(rep.label.family())].insert(family_key(rep.label));
  for (const auto& [dim, keys] : expected_families_by_dim()) {
    ++counts.cases;
    const auto it = report.families_by_dim.find(dim);
    if (it == report.families_by_dim.end() || it->second != keys) {
      fail(counts, "dimension " + std::to_string(dim) + ": family set differs from the expected table");
    }
  }
  for (const auto& [dim, keys] : report.families_by_dim) {
    if (!expected_families_by_dim().contains(dim)) fail(counts, "unexpected dimension " + std::to_string(dim));
  }
  report.checks.push_back(counts);

  CheckResult separation{"pairwise separation"};
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (std::size_t j = i + 1; j < catalog.size(); ++j) {
      ++separation.cases;
      if (catalog[i].label == catalog[j].label) {
        fail(separation, "duplicate catalog label " + render_label(catalog[i].label));
      } else if (found[i] && found[j] && *found[i] == *found[j]) {
        fail(separation, render_label(catalog[i].label) + " and " + render_label(catalog[j].label) +
                             " classify alike");
      }
    }
  }
  report.checks.push_back(separation);

  CheckResult swap{"factor swap pairing"};
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    if (!spans[k]) continue;
    ++swap.cases;
    const std::string name = render_label(catalog[k].label);
    auto got = try_classify(factor_swap(*spans[k]), swap, name);
    const ClassLabel want = swap_label(catalog[k].label);
    if (got && !(*got == want)) {
      fail(swap, name + ": swapped image is " + render_label(*got) + ", expected " + render_label(want));
    }
  }
  report.checks.push_back(swap);

  CheckResult guards{"non-existence guards"};
  ++guards.cases;
  try {
    (void)representative_of(ClassLabel::l3(Scalar::fraction(-1, 4), 1));
    fail(guards, "L3 at a = -1/4 was accepted");
  } catch (const InvalidLabel&) {
  }
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    if (!spans[k]) continue;
    ++guards.cases;
    if (forbidden_abstract_type(*spans[k])) fail(guards, render_label(catalog[k].label) + ": forbidden solvable type");
  }
  // Torus grid: ad(p h1 + q h2) on <x1, x2> never yields L3 at a = -1/4.
  for (long p = -5; p <= 5; ++p) {
    for (long q = -5; q <= 5; ++q) {
      if (p == 0 || q == 0) continue;
      ++guards.cases;
      const Element gens[] = {Element::unit(X1), Element::unit(X2), Scalar(p) * Element::unit(H1) + Scalar(q) * Element::unit(H2)};
      const Subalgebra s = Subalgebra::span_close(gens);
      if (forbidden_abstract_type(s)) fail(guards, "torus (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  }
  report.checks.push_back(guards);

  if (options.trials > 0) {
    CheckResult round{"conjugation round-trips"};
    for (std::size_t k = 0; k < catalog.size(); ++k) {
      if (!spans[k]) continue;
      const std::string name = render_label(catalog[k].label);
      for (int t = 0; t < options.trials; ++t) {
        ++round.cases;
        const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(t);
        const auto phi = random_inner(seed, options.complexity);
        const Subalgebra image = apply(phi, *spans[k]);
        auto got = try_classify(image, round, name);
        if (got && !(*got == catalog[k].label)) {
          fail(round, name + " (seed " + std::to_string(seed) + "): classified as " + render_label(*got));
        }
        if (forbidden_abstract_type(image)) fail(round, name + " (seed " + std::to_string(seed) + "): forbidden type");
      }
    }
    report.checks.push_back(round);
  }
  return report;
}

}  // namespace so4
