#include "toromaps/toroidal_analysis.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#ifdef TOROMAPS_HAVE_OPENMP
#include <omp.h>
#endif

namespace toromaps {

namespace {

std::string join_degrees(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (it != s.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

void require_large_vector(const ToroidalSpec& spec) {
  spec.validate();
  if (spec.s1 + spec.s2 <= 2) {
    throw InvalidSpec("check requires s1 + s2 > 2, got " + spec.to_string());
  }
}

Word lattice_word(const ToroidalSpec& spec, const TranslationWords& t, int d) {
  return t.u.pow(spec.s1 / d) * t.v.pow(spec.s2 / d);
}

// Extra generator of the larger translation-based subgroup.
Word rotation_extension(Family f) {
  switch (f) {
    case Family::Map44: return Word::a().pow(2);
    case Family::Map36: return Word::b().pow(3);
    case Family::Map63: return Word::a().pow(3);
    case Family::Hyper333: break;
  }
  return Word{};
}

}  // namespace

ToroidalGroup ToroidalGroup::build(const ToroidalSpec& spec,
                                   std::size_t max_cosets) {
  spec.validate();
  Presentation pres = toroidal_presentation(spec);
  const CosetTable regular = enumerate(pres, {}, max_cosets);
  ToroidalGroup g{spec, std::move(pres), FiniteGroup::from_regular_table(regular),
                  translation_words(spec)};
  g.a = g.group.evaluate(Word::a());
  g.b = g.group.evaluate(Word::b());
  g.u = g.group.evaluate(g.translations.u);
  g.v = g.group.evaluate(g.translations.v);
  return g;
}

Subgroup ToroidalGroup::translation_subgroup() const {
  const Element gens[] = {u, v};
  return group.generate(gens);
}

Subgroup ToroidalGroup::generated_by(const std::vector<Word>& words) const {
  std::vector<Element> gens;
  for (const Word& w : words) gens.push_back(group.evaluate(w));
  return group.generate(gens);
}

namespace {

// u^i*v^j with unit and zero exponents dropped.
std::string translation_label(int i, int j) {
  auto term = [](const char* name, int k) -> std::string {
    if (k == 0) return "";
    return k == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(k);
  };
  const std::string u = term("u", i);
  const std::string v = term("v", j);
  if (u.empty()) return v.empty() ? "1" : v;
  return v.empty() ? u : u + "*" + v;
}

}  // namespace

std::vector<NamedSubgroup> named_subgroups(const ToroidalSpec& spec) {
  const Word a = Word::a();
  const Word b = Word::b();
  std::vector<NamedSubgroup> out;
  if (spec.family == Family::Map63 || spec.family == Family::Hyper333) {
    out.push_back({"<a>", {a}});
    out.push_back({"<b>", {b}});
  } else {
    out.push_back({"<b>", {b}});
    out.push_back({"<a>", {a}});
  }
  out.push_back({"<a*b>", {a * b}});

  const TranslationWords t = translation_words(spec);
  const Word ext = rotation_extension(spec.family);
  for (int d : divisors(spec.gcd())) {
    const Word w = lattice_word(spec, t, d);
    const std::string ws = translation_label(spec.s1 / d, spec.s2 / d);
    if (!ext.is_identity()) {
      out.push_back({"<" + ext.to_string() + ", " + ws + ">", {ext, w}});
    }
    out.push_back({"<" + ws + ">", {w}});
  }
  out.push_back({"<1>", {}});
  return out;
}

std::set<std::size_t> predicted_degree_set(const ToroidalSpec& spec) {
  spec.validate();
  const bool corner = spec.s1 + spec.s2 <= 2;
  if (corner && spec.family == Family::Map44) return {8, 16};
  if (corner && (spec.family == Family::Map36 || spec.family == Family::Map63)) {
    return {6, 8, 12};
  }
  const auto t = static_cast<std::size_t>(expected_translation_order(spec));
  std::set<std::size_t> out{t};
  for (int di : divisors(spec.gcd())) {
    const auto d = static_cast<std::size_t>(di);
    switch (spec.family) {
      case Family::Map44:
        out.insert(2 * t / d);
        out.insert(4 * t / d);
        break;
      case Family::Map36:
      case Family::Map63:
        out.insert(2 * t);
        out.insert(3 * t / d);
        out.insert(6 * t / d);
        break;
      case Family::Hyper333:
        out.insert(3 * t / d);
        break;
    }
  }
  return out;
}

bool formula_asserted(const ToroidalSpec& spec) {
  return !(spec.family == Family::Hyper333 && spec.s1 + spec.s2 <= 2);
}

DegreeReport brute_force_degree_set(const ToroidalSpec& spec,
                                    const AnalysisOptions& options) {
  return brute_force_degree_set(ToroidalGroup::build(spec, options.max_cosets),
                                options);
}

DegreeReport brute_force_degree_set(const ToroidalGroup& g,
                                    const AnalysisOptions& options) {
  DegreeReport r;
  r.spec = g.spec;
  r.group_order = g.group.order();
  r.translation_order = g.translation_subgroup().order();
  EnumerationOptions eo;
  eo.execution = options.execution;
  r.classes = all_subgroup_classes(g.group, eo);
  r.computed_degrees = corefree_indices(r.classes);
  r.predicted_degrees = predicted_degree_set(g.spec);
  r.match = r.computed_degrees == r.predicted_degrees;
  r.formula_asserted = formula_asserted(g.spec);

  for (const NamedSubgroup& named : named_subgroups(g.spec)) {
    const Subgroup h = g.generated_by(named.generators);
    const std::size_t degree = g.group.order() / h.order();
    if (r.witnesses.contains(degree)) continue;
    const std::size_t idx = find_class(g.group, r.classes, h);
    if (idx < r.classes.size() && r.classes[idx].corefree) {
      r.witnesses.emplace(degree, Witness{named.label, h.order(), named.generators});
    }
  }
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const SubgroupClass& c = r.classes[i];
    if (!c.corefree || r.witnesses.contains(c.index)) continue;
    r.witnesses.emplace(c.index,
                        Witness{"class " + std::to_string(i), c.order, c.witness_words});
  }
  return r;
}

PermutationRep class_representation(const ToroidalGroup& g,
                                    const SubgroupClass& cls,
                                    std::size_t max_cosets) {
  return to_permutation_rep(enumerate(g.presentation, cls.witness_words, max_cosets));
}

bool verify_proposition_corefree_cyclics(const ToroidalGroup& g) {
  require_large_vector(g.spec);
  const Word a = Word::a();
  const Word b = Word::b();
  for (const Word& w : {a, b, a * b}) {
    if (core(g.group, g.generated_by({w})).order() != 1) return false;
  }
  return true;
}

bool verify_proposition_corefree_cyclics(const ToroidalSpec& spec) {
  require_large_vector(spec);
  return verify_proposition_corefree_cyclics(ToroidalGroup::build(spec));
}

bool verify_proposition_translation_subgroups(const ToroidalGroup& g) {
  const ToroidalSpec& spec = g.spec;
  require_large_vector(spec);
  const std::size_t order = g.group.order();
  const Word ext = rotation_extension(spec.family);
  for (int di : divisors(spec.gcd())) {
    const auto d = static_cast<std::size_t>(di);
    const Word w = lattice_word(spec, g.translations, di);
    const Subgroup h1 = g.generated_by({w});
    if (order / h1.order() != order / d || h1.order() != d) return false;
    if (core(g.group, h1).order() != 1) return false;
    if (ext.is_identity()) continue;
    const Subgroup h2 = g.generated_by({ext, w});
    if (h2.order() != 2 * d) return false;
    if (core(g.group, h2).order() != 1) return false;
  }
  return true;
}

bool verify_proposition_translation_subgroups(const ToroidalSpec& spec) {
  require_large_vector(spec);
  return verify_proposition_translation_subgroups(ToroidalGroup::build(spec));
}

bool verify_lemma_blocks(const ToroidalGroup& g,
                         const std::vector<SubgroupClass>& classes) {
  const std::size_t t_order = g.translation_subgroup().order();
  const std::size_t quotient = g.group.order() / t_order;
  const std::vector<int> ds = divisors(g.spec.gcd());
  const bool dual_pair = g.spec.family == Family::Map36 || g.spec.family == Family::Map63;

  for (const SubgroupClass& c : classes) {
    if (!c.corefree) continue;
    const std::vector<Permutation> action = coset_action(g.group, c.representative);
    const PermutationRep rep{action[0], action[1]};
    const PermGroup image(rep);
    const PermGroup translations(std::vector<Permutation>{rep.evaluate(g.translations.u),
                                  rep.evaluate(g.translations.v)});
    const Partition cells = orbits(translations);
    if (cells.size() == 1) {
      if (rep.degree() != t_order) return false;
      continue;
    }
    BlockShape shape;
    try {
      shape = minimal_block_system_sizes(image, cells);
    } catch (const NotInvariant&) {
      return false;
    }
    if (quotient % shape.blocks != 0) return false;
    const bool k_ok = std::any_of(ds.begin(), ds.end(), [&](int d) {
      return shape.block_size * static_cast<std::size_t>(d) == t_order;
    });
    if (!k_ok) return false;
    if (dual_pair && shape.blocks == 2 && shape.block_size != t_order) return false;
  }
  return true;
}

bool verify_lemma_blocks(const ToroidalSpec& spec) {
  const ToroidalGroup g = ToroidalGroup::build(spec);
  return verify_lemma_blocks(g, all_subgroup_classes(g.group));
}

bool verify_proposition_T_structure(const ToroidalGroup& g) {
  const Subgroup t = g.translation_subgroup();
  const std::uint64_t u_order = g.group.element_order(g.u);
  const auto gcd = static_cast<std::uint64_t>(g.spec.gcd());
  if (t.order() != u_order * gcd) return false;

  const Element u_gen[] = {g.u};
  const Subgroup cyclic_u = g.group.generate(u_gen);
  if (t.order() / cyclic_u.order() != gcd) return false;
  Element v_pow = 0;
  for (std::uint64_t i = 0; i < gcd; ++i) v_pow = g.group.mul(v_pow, g.v);
  if (!cyclic_u.contains(v_pow)) return false;

  std::vector<Element> products;
  Element vj = 0;
  for (std::uint64_t j = 0; j < gcd; ++j) {
    Element ui = 0;
    for (std::uint64_t i = 0; i < u_order; ++i) {
      products.push_back(g.group.mul(ui, vj));
      ui = g.group.mul(ui, g.u);
    }
    vj = g.group.mul(vj, g.v);
  }
  return Subgroup(std::move(products)) == t;
}

bool verify_proposition_T_structure(const ToroidalSpec& spec) {
  return verify_proposition_T_structure(ToroidalGroup::build(spec));
}

OrderFacts order_facts(const ToroidalGroup& g) {
  OrderFacts f;
  const FiniteGroup& G = g.group;
  const Subgroup t = g.translation_subgroup();
  f.group_order = G.order();
  f.translation_order = t.order();
  f.u_order = G.element_order(g.u);
  f.v_order = G.element_order(g.v);
  f.translations_abelian = G.mul(g.u, g.v) == G.mul(g.v, g.u);
  f.translations_normal = true;
  for (Element x : {g.u, g.v}) {
    for (Element s : {g.a, g.b}) {
      if (!t.contains(G.conjugate(x, s))) f.translations_normal = false;
    }
  }
  for (Element x = 0; x < G.order() && !f.u_conjugate_to_v; ++x) {
    f.u_conjugate_to_v = G.conjugate(g.u, x) == g.v;
  }
  const Element u_gen[] = {g.u};
  const Element v_gen[] = {g.v};
  f.cyclic_u_conjugate_to_cyclic_v =
      are_conjugate_subgroups(G, G.generate(u_gen), G.generate(v_gen));
  return f;
}

std::vector<ToroidalSpec> specs_in_range(const ScanRange& range) {
  std::vector<ToroidalSpec> out;
  for (Family f : range.families) {
    for (int sum = std::max(range.min_sum, 0); sum <= range.max_sum; ++sum) {
      for (int s1 = sum; s1 >= 0; --s1) {
        const ToroidalSpec spec{f, s1, sum - s1};
        if (range.ordered_only && spec.s1 < spec.s2) continue;
        if (spec.is_valid()) out.push_back(spec);
      }
    }
  }
  return out;
}

std::vector<ScanEntry> scan(const ScanRange& range, const AnalysisOptions& options) {
  const std::vector<ToroidalSpec> specs = specs_in_range(range);
  std::vector<ScanEntry> out(specs.size());
  AnalysisOptions inner = options;
  if (options.execution == Execution::Parallel) inner.execution = Execution::Serial;
  const auto n = static_cast<std::ptrdiff_t>(specs.size());
#ifdef TOROMAPS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (options.execution == Execution::Parallel)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    ScanEntry& e = out[static_cast<std::size_t>(i)];
    e.spec = specs[static_cast<std::size_t>(i)];
    try {
      e.report = brute_force_degree_set(e.spec, inner);
      e.ok = true;
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
  }
  return out;
}

bool VerificationReport::passed() const {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckOutcome& c) { return c.passed; });
}

VerificationReport verify_spec(const ToroidalSpec& spec,
                               const AnalysisOptions& options) {
  VerificationReport vr;
  vr.spec = spec;
  try {
    const ToroidalGroup g = ToroidalGroup::build(spec, options.max_cosets);
    const OrderFacts f = order_facts(g);
    const auto expected_g = static_cast<std::uint64_t>(expected_group_order(spec));
    const auto expected_t = static_cast<std::uint64_t>(expected_translation_order(spec));
    const auto gcd = static_cast<std::uint64_t>(spec.gcd());
    auto add = [&vr](std::string name, bool ok, std::string detail) {
      vr.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    add("group-order", f.group_order == expected_g,
        "|G|=" + std::to_string(f.group_order) + " expected " + std::to_string(expected_g));
    add("translation-order", f.translation_order == expected_t,
        "|T|=" + std::to_string(f.translation_order) + " expected " +
            std::to_string(expected_t));
    add("translation-element-orders",
        f.u_order * gcd == f.translation_order && f.v_order == f.u_order,
        "|u|=" + std::to_string(f.u_order) + " |v|=" + std::to_string(f.v_order) +
            " gcd=" + std::to_string(gcd));
    add("translations-abelian-normal", f.translations_abelian && f.translations_normal, "");
    add("translations-conjugate", f.cyclic_u_conjugate_to_cyclic_v,
        f.u_conjugate_to_v ? "u ~ v" : "<u> ~ <v>, u not conjugate to v");
    add("translation-structure", verify_proposition_T_structure(g), "");
    if (spec.s1 + spec.s2 > 2) {
      add("corefree-rotations", verify_proposition_corefree_cyclics(g), "");
      add("corefree-translation-subgroups", verify_proposition_translation_subgroups(g), "");
    }

    const DegreeReport report = brute_force_degree_set(g, options);
    add("orbit-blocks", verify_lemma_blocks(g, report.classes), "");

    const std::string sets = "computed " + join_degrees(report.computed_degrees) +
                             " predicted " + join_degrees(report.predicted_degrees);
    if (report.formula_asserted) {
      add("degree-set", report.match, sets);
    } else {
      add("degree-set", true, sets + (report.match ? " (agree" : " (differ") +
                                  "; closed form not claimed here)");
    }

    bool witnesses_ok = report.witnesses.size() == report.computed_degrees.size();
    for (const auto& [degree, w] : report.witnesses) {
      const PermutationRep rep =
          to_permutation_rep(enumerate(g.presentation, w.generators, options.max_cosets));
      const PermGroup image(rep);
      witnesses_ok = witnesses_ok && rep.degree() == degree && is_transitive(image) &&
                     group_order(image, g.group.order()) == g.group.order();
    }
    add("witness-representations", witnesses_ok, "");
  } catch (const std::exception& ex) {
    vr.error = ex.what();
  }
  return vr;
}

std::vector<VerificationReport> verify_range(const ScanRange& range,
                                             const AnalysisOptions& options) {
  const std::vector<ToroidalSpec> specs = specs_in_range(range);
  std::vector<VerificationReport> out(specs.size());
  AnalysisOptions inner = options;
  if (options.execution == Execution::Parallel) inner.execution = Execution::Serial;
  const auto n = static_cast<std::ptrdiff_t>(specs.size());
#ifdef TOROMAPS_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (options.execution == Execution::Parallel)
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = verify_spec(specs[static_cast<std::size_t>(i)], inner);
  }
  return out;
}

}  // namespace toromaps
