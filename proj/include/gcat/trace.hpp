#pragma once

// Statement-to-test table. Labels are short descriptive names; the manifest
// in tests/trace_manifest.txt lists the labels that must be covered.

#include <sstream>
#include <string>
#include <vector>

namespace gcat {

struct TraceEntry {
  std::string label;      // stable identifier, e.g. "unit-regular"
  std::string statement;  // one-line summary in our own words
  std::string operation;  // library entry point that realizes it
  std::string test;       // gtest "Suite.Name"
};

inline const std::vector<TraceEntry>& trace_table() {
  static const std::vector<TraceEntry> table{
      {"unit-regular", "the unit of an internal algebra is a regular morphism", "separability_verdict",
       "SeparabilityProperty.VerdictsMatchSectionIdentity"},
      {"counit-regular", "the counit of an internal coalgebra is a regular morphism", "coseparability_verdict",
       "Separability.VerdictExamples"},
      {"every-morphism-regular", "every morphism has a weak inverse g with fgf = f", "weak_inverse",
       "SplittingProperty.EveryMorphismIsRegular"},
      {"mono-split-epi-split", "monos and epis split", "find_retraction, find_section",
       "SplittingProperty.MonoIffSplitMonoAndEpiIffSplitEpi"},
      {"tensor-separable-iff-unit-split-mono", "- (x) A is separable iff u_A has a retraction",
       "separability_verdict, check_section_identity", "SeparabilityProperty.VerdictsMatchSectionIdentity"},
      {"tensor-semiseparable", "- (x) A is always semiseparable", "is_regular", "SeparabilityProperty.VerdictsMatchSectionIdentity"},
      {"tensor-naturally-full-iff-unit-split-epi", "- (x) A is naturally full iff u_A has a section",
       "separability_verdict", "Separability.VerdictExamples"},
      {"cotensor-separable-iff-counit-split-epi", "- (x) C is separable iff eps_C has a section",
       "coseparability_verdict, check_section_identity", "SeparabilityProperty.VerdictsMatchSectionIdentity"},
      {"unit-summand-algebra-coalgebra", "each unit summand 1_i is an algebra and a coalgebra",
       "unit_summand_algebra, unit_summand_coalgebra", "Algebra.UnitSummands"},
      {"unit-simple-one-object", "the unit is simple iff the groupoid has one object", "run_audit",
       "Audit.FusionFixturesSatisfyAllConditions"},
      {"fifteen-conditions-fusion", "the fifteen conditions all hold on fusion fixtures", "run_audit",
       "Audit.FusionFixturesSatisfyAllConditions"},
      {"fifteen-conditions-multifusion", "the fifteen conditions all fail, with witnesses, on multifusion fixtures",
       "run_audit, reverify_witness", "Audit.MultiFixturesFailEveryConditionWithWitness"},
      {"witnesses-reverify", "tampered witnesses are rejected", "reverify_witness", "Audit.TamperedWitnessIsRejected"},
      {"associated-idempotent", "e_M is an idempotent natural in M, trivial iff - (x) A is separable",
       "idempotent_e, idempotent_via_unit", "SeparabilityProperty.IdempotentIsNaturalAndIdempotent"},
      {"distinct-unit-summands-orthogonal", "only the zero morphism between distinct unit summands", "hom_dimension",
       "UnitSummands.OnlyZeroMorphismBetweenDistinctSummands"},
      {"subcategory-cj-multiring", "C_J is closed under tensor and duals with unit 1_J", "restrict_to, unit_on",
       "Subcategory.ClosedUnderTensorWithUnitOneJ"},
      {"lj-separable-frobenius", "L_J is a separable Frobenius monoidal functor", "inclusion_LJ, check_frobenius",
       "MonoidalFunctors.LJIsSeparableFrobenius"},
      {"rj-lax-colax", "R_J is lax and colax monoidal", "projection_RJ, check_lax, check_colax",
       "MonoidalFunctors.RJIsLaxAndColax"},
      {"corner-algebra", "A_J is an algebra in C_J", "restrict_to_J", "Corner.RestrictionEquationsAndUnitMono"},
      {"corner-inclusion-algebra-morphism", "i_{A_J} is an algebra morphism", "restrict_to_J, is_algebra_morphism",
       "Corner.RestrictionEquationsAndUnitMono"},
      {"support-vanishing", "components of A outside J x J vanish for J the support", "support",
       "Support.TheoremHoldsOnCorpus"},
      {"corner-unit-mono", "u_{A_J} is a monomorphism", "restrict_to_J", "Corner.RestrictionEquationsAndUnitMono"},
      {"corner-separable", "- (x) A_J is separable on C_J", "restricted_separability", "Adjunctions.RestrictedSeparability"},
      {"lj-rj-frobenius-pair", "(L_J, R_J) is a Frobenius pair", "frobenius_pair_check", "Adjunctions.FrobeniusPairOnSamples"},
      {"grothendieck-ring", "Gr(C) is a based ring on the simples", "grothendieck_ring, check_ring",
       "Grothendieck.PairGroupoidIsBasedNotFusion"},
      {"grothendieck-fusion-iff", "Gr(C) is a fusion ring iff C is fusion", "fusion_iff_separable_check",
       "Grothendieck.FusionIffOneObject"},
      {"example-vec", "Vec is fusion", "run_audit", "Audit.FusionFixturesSatisfyAllConditions"},
      {"example-matrix-units", "the pair groupoid behaves like bimodules over a product of fields", "groupoid_algebra",
       "Algebra.MatrixAlgebraOfPairGroupoid"},
  };
  return table;
}

/// Markdown rendering; docs/TRACEABILITY.md is this output.
inline std::string render_trace_markdown() {
  std::ostringstream os;
  os << "# Traceability\n\n";
  os << "Each in-scope statement, the entry point that realizes it, and the test that checks it.\n\n";
  os << "| label | statement | operation | test |\n|---|---|---|---|\n";
  for (const auto& e : trace_table())
    os << "| " << e.label << " | " << e.statement << " | `" << e.operation << "` | `" << e.test << "` |\n";
  return os.str();
}

}  // namespace gcat
