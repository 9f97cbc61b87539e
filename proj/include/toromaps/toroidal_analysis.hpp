#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toromaps/finite_group.hpp"
#include "toromaps/presentation.hpp"
#include "toromaps/subgroups.hpp"
#include "toromaps/todd_coxeter.hpp"

namespace toromaps {

struct AnalysisOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  Execution execution = Execution::Parallel;
};

/// Rotational group of a toroidal map or hypermap, realised through its
/// regular coset table.
struct ToroidalGroup {
  ToroidalSpec spec;
  Presentation presentation;
  FiniteGroup group;
  TranslationWords translations;
  Element a = 0;
  Element b = 0;
  Element u = 0;
  Element v = 0;

  static ToroidalGroup build(const ToroidalSpec& spec,
                             std::size_t max_cosets = kDefaultMaxCosets);

  Subgroup translation_subgroup() const;
  Subgroup generated_by(const std::vector<Word>& words) const;
};

/// A subgroup given by named words, e.g. <a^2, u*v>.
struct NamedSubgroup {
  std::string label;
  std::vector<Word> generators;
};

/// Subgroups that realise the closed-form degrees, in witness preference
/// order: the rotation subgroups first, then for each divisor d of
/// gcd(s1,s2) the translation subgroup <u^(s1/d) v^(s2/d)> and its
/// extension by a^2 ({4,4}), b^3 ({3,6}) or a^3 ({6,3}), then the
/// trivial subgroup.
std::vector<NamedSubgroup> named_subgroups(const ToroidalSpec& spec);

struct Witness {
  std::string label;  // named subgroup, or "class <i>" for an unnamed one
  std::size_t subgroup_order = 0;
  std::vector<Word> generators;
};

struct DegreeReport {
  ToroidalSpec spec;
  std::uint64_t group_order = 0;
  std::uint64_t translation_order = 0;
  std::set<std::size_t> computed_degrees;
  std::set<std::size_t> predicted_degrees;
  bool match = false;
  /// False where the closed-form degree set is not claimed; the comparison
  /// is still reported but does not count as a failure.
  bool formula_asserted = true;
  std::map<std::size_t, Witness> witnesses;
  std::vector<SubgroupClass> classes;
};

/// Closed-form degree set. Throws InvalidSpec for excluded vectors.
std::set<std::size_t> predicted_degree_set(const ToroidalSpec& spec);

/// Whether the closed form is claimed for this vector: everything except
/// (3,3,3) with (s1,s2) in {(0,2),(2,0)}.
bool formula_asserted(const ToroidalSpec& spec);

DegreeReport brute_force_degree_set(const ToroidalSpec& spec,
                                    const AnalysisOptions& options = {});
DegreeReport brute_force_degree_set(const ToroidalGroup& g,
                                    const AnalysisOptions& options = {});

/// Faithful transitive representation on the cosets of a class
/// representative, rebuilt by coset enumeration over its witness words.
PermutationRep class_representation(const ToroidalGroup& g,
                                    const SubgroupClass& cls,
                                    std::size_t max_cosets = kDefaultMaxCosets);

/// <a>, <b> and <ab> are core-free. Requires s1 + s2 > 2.
bool verify_proposition_corefree_cyclics(const ToroidalGroup& g);
bool verify_proposition_corefree_cyclics(const ToroidalSpec& spec);

/// For each divisor d of gcd(s1,s2) the subgroups <u^(s1/d) v^(s2/d)> and
/// its extension by a^2 / b^3 are core-free of index |G|/d and |G|/(2d).
/// Requires s1 + s2 > 2.
bool verify_proposition_translation_subgroups(const ToroidalGroup& g);
bool verify_proposition_translation_subgroups(const ToroidalSpec& spec);

/// For every core-free class on whose cosets T is intransitive: the T-orbits
/// form m blocks of size k with m | |G|/|T| and k = |T|/d, d | gcd(s1,s2);
/// for {3,6} and {6,3}, m = 2 forces k = |T|. Where T is transitive the
/// degree must be |T|.
bool verify_lemma_blocks(const ToroidalGroup& g,
                         const std::vector<SubgroupClass>& classes);
bool verify_lemma_blocks(const ToroidalSpec& spec);

/// T = { u^i v^j : 0 <= i < |u|, 0 <= j < gcd } with |T| = |u| gcd and
/// v^gcd in <u>.
bool verify_proposition_T_structure(const ToroidalGroup& g);
bool verify_proposition_T_structure(const ToroidalSpec& spec);

struct OrderFacts {
  std::uint64_t group_order = 0;
  std::uint64_t translation_order = 0;
  std::uint64_t u_order = 0;
  std::uint64_t v_order = 0;
  bool translations_abelian = false;
  bool translations_normal = false;
  bool u_conjugate_to_v = false;
  bool cyclic_u_conjugate_to_cyclic_v = false;
};

OrderFacts order_facts(const ToroidalGroup& g);

struct ScanRange {
  std::vector<Family> families{std::begin(kAllFamilies), std::end(kAllFamilies)};
  int min_sum = 0;
  int max_sum = 6;
  /// Only vectors with s1 >= s2 (the mirror image has an isomorphic group).
  bool ordered_only = false;
};

/// Valid specs in the range: family-major, then s1 + s2 ascending, then s1
/// descending.
std::vector<ToroidalSpec> specs_in_range(const ScanRange& range);

struct ScanEntry {
  ToroidalSpec spec;
  bool ok = false;
  DegreeReport report;
  std::string error;
};

/// brute_force_degree_set over every spec in range; specs run in parallel
/// and errors are recorded per entry.
std::vector<ScanEntry> scan(const ScanRange& range,
                            const AnalysisOptions& options = {});

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  ToroidalSpec spec;
  std::vector<CheckOutcome> checks;
  std::string error;

  bool passed() const;
};

/// Every applicable check for one spec.
VerificationReport verify_spec(const ToroidalSpec& spec,
                               const AnalysisOptions& options = {});
std::vector<VerificationReport> verify_range(const ScanRange& range,
                                             const AnalysisOptions& options = {});

}  // namespace toromaps
