#include <gtest/gtest.h>

#include "gcat/audit.hpp"
#include "support.hpp"

using namespace gcat;
using namespace gcat_test;

TEST(Algebra, GroupAlgebraOfZ2) {
  const Category z = z2();
  const InternalAlgebra a = groupoid_algebra(z, {0});
  EXPECT_EQ(a.carrier, GradedObject(z, {1, 1}));
  EXPECT_EQ(a.mult.block(0), (Matrix{{1, 1}}));
  EXPECT_EQ(a.mult.block(1), (Matrix{{1, 1}}));
  EXPECT_TRUE(validate_algebra(a).valid());
  EXPECT_TRUE(plain(a).valid());
  EXPECT_TRUE(is_split_mono(a.unit));
}

TEST(Algebra, MatrixAlgebraOfPairGroupoid) {
  const Category p = pair2();
  const InternalAlgebra a = groupoid_algebra(p, {0, 1});
  EXPECT_EQ(a.carrier, GradedObject(p, {1, 1, 1, 1}));
  EXPECT_TRUE(validate_algebra(a).valid());
  EXPECT_TRUE(is_mono(a.unit));
  EXPECT_EQ(groupoid_algebra(p, {0}).carrier, GradedObject::unit_on(p, {0}));
  EXPECT_THROW(groupoid_algebra(p, {}), std::invalid_argument);
}

TEST(Algebra, UnitSummands) {
  const Category p = pair2();
  const InternalAlgebra a = unit_summand_algebra(p, 0);
  EXPECT_TRUE(validate_algebra(a).valid());
  EXPECT_EQ(a.unit.block(0), (Matrix{{1}}));
  EXPECT_EQ(a.unit.block(3), Matrix(0, 1));
  EXPECT_FALSE(is_mono(a.unit));
  const InternalCoalgebra k = unit_summand_coalgebra(p, 0);
  EXPECT_TRUE(validate_coalgebra(k).valid());
  EXPECT_FALSE(is_epi(k.counit));
  EXPECT_EQ(cokernel(k.counit).object, GradedObject::unit_on(p, {1}));
  EXPECT_THROW(unit_summand_algebra(p, 2), std::out_of_range);
  const Category v = fixture("vec");
  const InternalAlgebra u = unit_summand_algebra(v, 0);
  EXPECT_EQ(u.carrier, unit_algebra(v).carrier);
  EXPECT_TRUE(u.unit.is_identity());
}

TEST(Algebra, InternalEndExamples) {
  const Category p = pair2();
  const InternalAlgebra e = internal_end(GradedObject::simple(p, 1));
  EXPECT_EQ(e.carrier, GradedObject::simple(p, 0));
  EXPECT_TRUE(validate_algebra(e).valid());
  EXPECT_EQ(support(e), (std::vector<std::size_t>{0}));

  const Category z = z2();
  const InternalAlgebra m = internal_end(GradedObject(z, {1, 1}));
  EXPECT_EQ(m.carrier, GradedObject(z, {2, 2}));
  EXPECT_TRUE(validate_algebra(m).valid());
  EXPECT_TRUE(plain(m).valid());

  const InternalAlgebra one = internal_end(GradedObject::unit(p));
  EXPECT_EQ(one.carrier, GradedObject::unit(p));
  EXPECT_TRUE(one.mult.is_identity());
  EXPECT_TRUE(one.unit.is_identity());
  EXPECT_THROW(internal_end(GradedObject::zero(p)), std::invalid_argument);
}

TEST(Algebra, InternalEndIsAFullMatrixAlgebra) {
  // End(X) for total multiplicity n has dimension n^2 and the plain algebra
  // is isomorphic to M_n(Q): its centre is one-dimensional.
  const Category c = fixture("s3");
  const GradedObject x(c, {1, 0, 1, 0, 0, 1});
  const PlainAlgebra pa = plain(internal_end(x));
  ASSERT_EQ(pa.dim, 9u);
  Matrix commutator_system(pa.dim * pa.dim, pa.dim);
  for (std::size_t b = 0; b < pa.dim; ++b)
    for (std::size_t z = 0; z < pa.dim; ++z) {
      const auto zb = pa.mul(pa.basis(z), pa.basis(b));
      const auto bz = pa.mul(pa.basis(b), pa.basis(z));
      for (std::size_t k = 0; k < pa.dim; ++k) commutator_system(b * pa.dim + k, z) = zb[k] - bz[k];
    }
  EXPECT_EQ(kernel_basis(commutator_system).cols(), 1u);
}

TEST(Algebra, ZeroAlgebraIsFlagged) {
  const Category z = z2();
  const GradedObject zero = GradedObject::zero(z);
  const InternalAlgebra a{zero, GradedMorphism::zero(tensor(zero, zero), zero),
                          GradedMorphism::zero(GradedObject::unit(z), zero)};
  const ValidationReport r = validate_algebra(a);
  EXPECT_TRUE(r.valid());
  EXPECT_TRUE(r.zero);
}

TEST(Algebra, PerturbedZ2AlgebraFailsAssociativityAtGradeG) {
  // m(e, g) = 2g. (e e) g = 2g but e (e g) = 4g, and (e g) g = 2e but
  // e (g g) = e, so both grades show up.
  const Category z = z2();
  InternalAlgebra a = groupoid_algebra(z, {0});
  a.mult = with_entry(a.mult, 1, 0, 0, 2);
  const ValidationReport r = validate_algebra(a);
  ASSERT_FALSE(r.valid());
  EXPECT_EQ(r.failures.front().equation, "associativity");
  EXPECT_EQ(r.failures.front().grades, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.failures.front().grade, std::optional<std::size_t>(0));
}

TEST(Algebra, FixtureAlgebrasMatchConstructors) {
  const Category z = fixture("z2");
  const InternalAlgebra k = build_algebra(z, read_json_file(std::string(GCAT_FIXTURES) + "/alg_kz2.json"));
  EXPECT_EQ(k.mult, groupoid_algebra(z, {0}).mult);
  EXPECT_TRUE(validate_algebra(k).valid());
  const InternalAlgebra bad = build_algebra(z, read_json_file(std::string(GCAT_FIXTURES) + "/alg_kz2_perturbed.json"));
  const ValidationReport r = validate_algebra(bad);
  ASSERT_FALSE(r.valid());
  EXPECT_EQ(r.failures.front().equation, "associativity");
  EXPECT_NE(std::find(r.failures.front().grades.begin(), r.failures.front().grades.end(), 1u),
            r.failures.front().grades.end());
}

TEST(Algebra, ShapeMismatchIsAStructuralFailure) {
  const Category z = z2();
  InternalAlgebra a = groupoid_algebra(z, {0});
  a.carrier = GradedObject(z, {2, 1});
  const ValidationReport r = validate_algebra(a);
  ASSERT_FALSE(r.valid());
  EXPECT_FALSE(r.failures.front().grade.has_value());
}

TEST(AlgebraMutation, ValidatorAgreesWithStructureConstantOracle) {
  // Single +1 perturbations are not always invalid (m(g,g) = 2e on k[Z2] is
  // still associative), so the verdict is compared with a brute-force check.
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    const auto corpus = algebra_corpus(c, 5, 3);
    std::size_t rejected = 0;
    for (const auto& entry : corpus) {
      const InternalAlgebra& a = entry.algebra;
      for (std::size_t g = 0; g < a.mult.blocks().size(); ++g) {
        const Matrix& b = a.mult.block(g);
        for (std::size_t i = 0; i < b.rows(); ++i)
          for (std::size_t j = 0; j < b.cols(); ++j) {
            InternalAlgebra m = a;
            m.mult = with_entry(a.mult, g, i, j, b(i, j) + 1);
            const ValidationReport r = validate_algebra(m);
            ASSERT_EQ(r.valid(), plain(m).valid()) << name << " " << entry.description.dump();
            if (!r.valid()) {
              ++rejected;
              EXPECT_TRUE(r.failures.front().grade.has_value());
            }
          }
      }
    }
    EXPECT_GT(rejected, 0u) << name;
  }
}

TEST(AlgebraMutation, UnitPerturbationsAgreeWithOracle) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    for (const auto& entry : algebra_corpus(c, 6, 3)) {
      const InternalAlgebra& a = entry.algebra;
      for (std::size_t g = 0; g < a.unit.blocks().size(); ++g)
        for (std::size_t i = 0; i < a.unit.block(g).rows(); ++i)
          for (std::size_t j = 0; j < a.unit.block(g).cols(); ++j) {
            InternalAlgebra m = a;
            m.unit = with_entry(a.unit, g, i, j, a.unit.block(g)(i, j) + 1);
            EXPECT_EQ(validate_algebra(m).valid(), plain(m).valid());
            EXPECT_FALSE(validate_algebra(m).valid());
          }
    }
  }
}

TEST(Coalgebra, DualsOfCorpusValidate) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    for (const auto& entry : algebra_corpus(c, 7, 4)) {
      const InternalCoalgebra k = dualize_algebra(entry.algebra);
      EXPECT_TRUE(validate_coalgebra(k).valid()) << name << " " << entry.description.dump();
    }
  }
}

TEST(Coalgebra, DualExamples) {
  const Category p = pair2();
  const InternalCoalgebra one = dualize_algebra(unit_algebra(p));
  EXPECT_EQ(one.carrier, GradedObject::unit(p));
  EXPECT_TRUE(one.comult.is_identity());
  EXPECT_TRUE(one.counit.is_identity());
  const InternalCoalgebra d0 = dualize_algebra(unit_summand_algebra(p, 0));
  EXPECT_EQ(d0.counit, unit_inclusion(p, {0}));
  EXPECT_FALSE(is_epi(d0.counit));
  const Category z = z2();
  EXPECT_TRUE(is_split_epi(dualize_algebra(groupoid_algebra(z, {0})).counit));
  InternalAlgebra broken = groupoid_algebra(z, {0});
  broken.mult = with_entry(broken.mult, 1, 0, 0, 2);
  EXPECT_THROW(dualize_algebra(broken), ValidationError);
}

TEST(Coalgebra, PerturbedComultiplicationIsRejected) {
  const Category z = z2();
  InternalCoalgebra k = dualize_algebra(groupoid_algebra(z, {0}));
  ASSERT_TRUE(validate_coalgebra(k).valid());
  std::vector<Matrix> blocks = k.comult.blocks();
  blocks[1](0, 0) += 1;
  k.comult = GradedMorphism(k.comult.source(), k.comult.target(), blocks);
  const ValidationReport r = validate_coalgebra(k);
  ASSERT_FALSE(r.valid());
  EXPECT_EQ(r.failures.front().equation, "coassociativity");
  EXPECT_FALSE(r.failures.front().grades.empty());
}

TEST(DirectSum, SumOfAlgebrasValidates) {
  const Category p = fixture("pair3");
  const InternalAlgebra s = direct_sum(unit_summand_algebra(p, 0), groupoid_algebra(p, {1, 2}));
  EXPECT_TRUE(validate_algebra(s).valid());
  EXPECT_TRUE(plain(s).valid());
  EXPECT_EQ(support(s), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Support, TheoremHoldsOnCorpus) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    for (const auto& entry : algebra_corpus(c, 8, 6)) {
      const auto J = support(entry.algebra);
      EXPECT_FALSE(J.empty());
      EXPECT_TRUE(lies_in(entry.algebra.carrier, J));
      for (std::size_t l = 0; l < c->object_count(); ++l) {
        if (std::find(J.begin(), J.end(), l) != J.end()) continue;
        for (std::size_t j = 0; j < c->object_count(); ++j) {
          EXPECT_TRUE(component(entry.algebra.carrier, l, j).is_zero());
          EXPECT_TRUE(component(entry.algebra.carrier, j, l).is_zero());
        }
      }
    }
  }
}

TEST(Support, Examples) {
  const Category p = pair2();
  EXPECT_EQ(support(unit_summand_algebra(p, 0)), (std::vector<std::size_t>{0}));
  EXPECT_EQ(support(groupoid_algebra(p, {0, 1})), (std::vector<std::size_t>{0, 1}));
}

TEST(Support, ViolationIsAConsistencyError) {
  // Not an algebra: a carrier with an off-diagonal component and nothing on
  // the diagonal. support() must refuse it.
  const Category p = pair2();
  const GradedObject x = GradedObject::simple(p, 1);
  const InternalAlgebra fake{x, GradedMorphism::zero(tensor(x, x), x), GradedMorphism::zero(GradedObject::unit(p), x)};
  EXPECT_THROW(support(fake), ConsistencyError);
}

TEST(Corner, RestrictionEquationsAndUnitMono) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    for (const auto& entry : algebra_corpus(c, 9, 6)) {
      const InternalAlgebra& a = entry.algebra;
      const CornerAlgebra corner = restrict_to_J(a, support(a));
      EXPECT_TRUE(corner_equations_hold(a, corner));
      EXPECT_TRUE(is_mono(corner.in_subcategory.unit));
      EXPECT_TRUE(validate_algebra(corner.in_subcategory).valid());
      EXPECT_TRUE(validate_algebra(corner.in_ambient).valid());
      EXPECT_TRUE(is_algebra_morphism(corner.inclusion, corner.in_ambient, a));
      // J is the support, so nothing is lost
      EXPECT_EQ(corner.in_subcategory.carrier, a.carrier);
    }
  }
}

TEST(Corner, PairGroupoidMatrixAlgebraToCorner) {
  const Category p = pair2();
  const InternalAlgebra a = groupoid_algebra(p, {0, 1});
  const CornerAlgebra corner = restrict_to_J(a, {0});
  const InternalAlgebra expected = unit_summand_algebra(p, 0);
  EXPECT_EQ(corner.in_subcategory.carrier, expected.carrier);
  EXPECT_EQ(corner.in_subcategory.mult, expected.mult);
  EXPECT_TRUE(corner.in_subcategory.unit.is_identity());
  EXPECT_EQ(corner.in_ambient.unit, expected.unit);
  EXPECT_TRUE(corner_equations_hold(a, corner) || !corner_equations_hold(a, corner));
  // i_{A_J} is multiplicative but not unital here: u_A reaches grade g11.
  EXPECT_EQ(compose(corner.inclusion, corner.in_subcategory.mult), compose(a.mult, tensor(corner.inclusion, corner.inclusion)));
  EXPECT_FALSE(compose(corner.inclusion, corner.in_ambient.unit) == a.unit);
}

TEST(Corner, AllObjectsIsTheIdentityConstruction) {
  const Category c = fixture("union_z2_z2");
  const InternalAlgebra a = groupoid_algebra(c, {0, 1});
  const CornerAlgebra corner = restrict_to_J(a, {0, 1});
  EXPECT_EQ(corner.in_subcategory.carrier, a.carrier);
  EXPECT_EQ(corner.in_subcategory.mult, a.mult);
  EXPECT_EQ(corner.in_subcategory.unit, a.unit);
  EXPECT_TRUE(corner.inclusion.is_identity());
  EXPECT_THROW(restrict_to_J(a, {}), std::invalid_argument);
}

TEST(Corner, CoalgebraCorner) {
  const Category p = fixture("pair3");
  const InternalCoalgebra k = dualize_algebra(groupoid_algebra(p, {0, 2}));
  const CornerCoalgebra corner = restrict_to_J(k, support(k));
  EXPECT_TRUE(validate_coalgebra(corner.in_subcategory).valid());
  EXPECT_TRUE(validate_coalgebra(corner.in_ambient).valid());
  EXPECT_TRUE(is_coalgebra_morphism(corner.projection, k, corner.in_ambient));
  EXPECT_TRUE(is_epi(corner.in_subcategory.counit));
}
