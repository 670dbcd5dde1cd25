#include <gtest/gtest.h>

#include <tuple>

#include "gcat/random.hpp"
#include "support.hpp"

using namespace gcat;
using namespace gcat_test;

namespace {

// Basis of grade k of a tensor product listed by hand: every composable
// (g1, g2) with g1 g2 = k in lexicographic order, then the Kronecker slots.
using Triple = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Triple> left_nested_basis(const GradedObject& u, const GradedObject& v, const GradedObject& w, std::size_t k) {
  const Groupoid& G = u.groupoid();
  std::vector<Triple> out;
  for (std::size_t h = 0; h < G.arrow_count(); ++h)
    for (std::size_t g3 = 0; g3 < G.arrow_count(); ++g3) {
      if (G.tgt(h) != G.src(g3) || *G.compose(h, g3) != k) continue;
      for (std::size_t g1 = 0; g1 < G.arrow_count(); ++g1)
        for (std::size_t g2 = 0; g2 < G.arrow_count(); ++g2) {
          if (G.tgt(g1) != G.src(g2) || *G.compose(g1, g2) != h) continue;
          for (std::size_t a = 0; a < u.mult(g1); ++a)
            for (std::size_t b = 0; b < v.mult(g2); ++b)
              for (std::size_t c = 0; c < w.mult(g3); ++c) out.emplace_back(g1, a, g2, b, g3, c);
        }
    }
  return out;
}

std::vector<Triple> right_nested_basis(const GradedObject& u, const GradedObject& v, const GradedObject& w, std::size_t k) {
  const Groupoid& G = u.groupoid();
  std::vector<Triple> out;
  for (std::size_t g1 = 0; g1 < G.arrow_count(); ++g1)
    for (std::size_t h = 0; h < G.arrow_count(); ++h) {
      if (G.tgt(g1) != G.src(h) || *G.compose(g1, h) != k) continue;
      for (std::size_t a = 0; a < u.mult(g1); ++a)
        for (std::size_t g2 = 0; g2 < G.arrow_count(); ++g2)
          for (std::size_t g3 = 0; g3 < G.arrow_count(); ++g3) {
            if (G.tgt(g2) != G.src(g3) || *G.compose(g2, g3) != h) continue;
            for (std::size_t b = 0; b < v.mult(g2); ++b)
              for (std::size_t c = 0; c < w.mult(g3); ++c) out.emplace_back(g1, a, g2, b, g3, c);
          }
    }
  return out;
}

}  // namespace

TEST(GradedObject, TensorOfObjects) {
  const Category z = z2();
  const GradedObject x(z, {1, 1});
  EXPECT_EQ(tensor(x, x).mults(), (std::vector<std::size_t>{2, 2}));
  const Category p = pair2();
  EXPECT_EQ(tensor(GradedObject::simple(p, 1), GradedObject::simple(p, 2)), GradedObject::simple(p, 0));
  EXPECT_TRUE(tensor(GradedObject::simple(p, 1), GradedObject::simple(p, 1)).is_zero());
  EXPECT_EQ(tensor(GradedObject::unit_on(p, {0}), GradedObject::unit_on(p, {1})), GradedObject::zero(p));
}

TEST(GradedObject, UnitIsStrict) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    Sampler s(3);
    const GradedObject one = GradedObject::unit(c);
    for (int t = 0; t < 20; ++t) {
      const GradedMorphism f = s.morphism(c, 3);
      EXPECT_EQ(tensor(GradedMorphism::identity(one), f), f) << name;
      EXPECT_EQ(tensor(f, GradedMorphism::identity(one)), f) << name;
    }
  }
}

TEST(GradedMorphism, ShapeAndInstanceErrors) {
  const Category z = z2();
  const GradedObject x(z, {1, 0});
  EXPECT_THROW(GradedMorphism(x, x, {Matrix(1, 1)}), ShapeError);
  EXPECT_THROW(GradedMorphism(x, x, {Matrix(2, 1), Matrix(0, 0)}), ShapeError);
  EXPECT_THROW(GradedObject(z, {1}), ShapeError);
  const Category other = share(make_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}));
  EXPECT_THROW(tensor(x, GradedObject::unit(other)), InstanceError);
  EXPECT_THROW(compose(GradedMorphism::identity(x), GradedMorphism::identity(GradedObject(z, {0, 1}))), ShapeError);
}

TEST(GradedMorphism, SeparateInstancesOfTheSameGroupoidInteroperate) {
  const Category a = z2(), b = z2();
  EXPECT_EQ(GradedObject::unit(a), GradedObject::unit(b));
  EXPECT_NO_THROW(tensor(GradedObject::unit(a), GradedObject::unit(b)));
}

TEST(Associator, MatchesBruteForceTripleOrder) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    Sampler s(5);
    for (int t = 0; t < 10; ++t) {
      const GradedObject u = s.object(c, 3), v = s.object(c, 3), w = s.object(c, 3);
      const GradedMorphism a = associator(u, v, w);
      for (std::size_t k = 0; k < c->arrow_count(); ++k) {
        const auto left = left_nested_basis(u, v, w, k);
        const auto right = right_nested_basis(u, v, w, k);
        ASSERT_EQ(left.size(), right.size());
        Matrix expected(left.size(), left.size());
        for (std::size_t col = 0; col < left.size(); ++col)
          for (std::size_t row = 0; row < right.size(); ++row)
            if (right[row] == left[col]) expected(row, col) = 1;
        EXPECT_EQ(a.block(k), expected) << name << " grade " << k;
      }
    }
  }
}

TEST(Associator, NotTheIdentityForZ2) {
  // The two bracketings of {e,g}^(x)3 list the grade-e basis in different
  // orders, so no choice of slot order makes the associator trivial.
  const Category z = z2();
  const GradedObject x(z, {1, 1});
  EXPECT_FALSE(associator(x, x, x).is_identity());
  EXPECT_EQ(tensor(tensor(x, x), x), tensor(x, tensor(x, x)));
}

TEST(Associator, NaturalAndPentagon) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    Sampler s(6);
    for (int t = 0; t < 15; ++t) {
      const GradedMorphism f = s.morphism(c, 2), g = s.morphism(c, 2), h = s.morphism(c, 2);
      EXPECT_EQ(compose(associator(f.target(), g.target(), h.target()), tensor(tensor(f, g), h)),
                compose(tensor(f, tensor(g, h)), associator(f.source(), g.source(), h.source())))
          << name;
      const GradedObject a = s.object(c, 2), b = s.object(c, 2), x = s.object(c, 2), d = s.object(c, 2);
      const GradedMorphism ia = GradedMorphism::identity(a), id = GradedMorphism::identity(d);
      const GradedMorphism lhs = compose(associator(a, b, tensor(x, d)), associator(tensor(a, b), x, d));
      const GradedMorphism rhs = compose(tensor(ia, associator(b, x, d)), associator(a, tensor(b, x), d),
                                         tensor(associator(a, b, x), id));
      EXPECT_EQ(lhs, rhs) << name;
      EXPECT_TRUE(compose(associator_inverse(a, b, x), associator(a, b, x)).is_identity());
    }
  }
}

TEST(Duality, ZigZagWithAssociator) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    Sampler s(7);
    for (int t = 0; t < 20; ++t) {
      const GradedObject v = s.object(c, 3, true);
      const LeftDual d = left_dual(v);
      const GradedMorphism idv = GradedMorphism::identity(v), idd = GradedMorphism::identity(d.dual);
      EXPECT_TRUE(compose(tensor(idv, d.ev), associator(v, d.dual, v), tensor(d.coev, idv)).is_identity()) << name;
      EXPECT_TRUE(compose(tensor(d.ev, idd), associator_inverse(d.dual, v, d.dual), tensor(idd, d.coev)).is_identity())
          << name;
    }
  }
}

TEST(Duality, DualMorphismsAreFunctorialAndDinatural) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    Sampler s(8);
    for (int t = 0; t < 20; ++t) {
      const GradedObject x = s.object(c, 3), y = s.object(c, 3), z = s.object(c, 3);
      const GradedMorphism f = s.morphism(x, y), g = s.morphism(y, z);
      EXPECT_EQ(dual(compose(g, f)), compose(dual(f), dual(g)));
      EXPECT_EQ(dual(dual(x)), x);
      // ev_X o (f* (x) id_X) = ev_Y o (id_{Y*} (x) f)
      EXPECT_EQ(compose(left_dual(x).ev, tensor(dual(f), GradedMorphism::identity(x))),
                compose(left_dual(y).ev, tensor(GradedMorphism::identity(dual(y)), f)))
          << name;
    }
  }
}

TEST(Duality, TensorSwapIsAnIsoOntoTheReversedDual) {
  const Category c = fixture("s3");
  Sampler s(9);
  for (int t = 0; t < 10; ++t) {
    const GradedObject v = s.object(c, 3), w = s.object(c, 3);
    const GradedMorphism sw = dual_tensor_swap(v, w);
    EXPECT_TRUE(is_iso(sw));
    EXPECT_EQ(sw.target(), tensor(dual(w), dual(v)));
    // natural in both arguments
    const GradedObject v2 = s.object(c, 3), w2 = s.object(c, 3);
    const GradedMorphism f = s.morphism(v, v2), g = s.morphism(w, w2);
    EXPECT_EQ(compose(tensor(dual(g), dual(f)), dual_tensor_swap(v2, w2)), compose(sw, dual(tensor(f, g))));
  }
}

TEST(Abelian, KernelCokernelImage) {
  for (const auto& name : fixture_names()) {
    const Category c = fixture(name);
    Sampler s(10);
    for (int t = 0; t < 30; ++t) {
      const GradedMorphism f = s.morphism(c, 4);
      const Kernel k = kernel(f);
      EXPECT_TRUE(compose(f, k.inclusion).is_zero());
      EXPECT_TRUE(is_mono(k.inclusion));
      const Cokernel q = cokernel(f);
      EXPECT_TRUE(compose(q.projection, f).is_zero());
      EXPECT_TRUE(is_epi(q.projection));
      const ImageFactorization im = image_factorization(f);
      EXPECT_EQ(compose(im.phi, im.psi), f);
      EXPECT_TRUE(is_epi(im.psi));
      EXPECT_TRUE(is_mono(im.phi));
      EXPECT_EQ(k.object.total() + im.image.total(), f.source().total());
      EXPECT_EQ(q.object.total() + im.image.total(), f.target().total());
      // kernel universal property on h = inclusion o x
      const GradedMorphism x = s.morphism(GradedObject::simple(c, 0), k.object);
      const auto back = factor_through_kernel(k, compose(k.inclusion, x));
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, x);
    }
  }
}

TEST(Abelian, MonoEpiIsoOnExamples) {
  const Category p = pair2();
  const GradedMorphism p0 = unit_projection(p, {0});
  EXPECT_TRUE(is_epi(p0));
  EXPECT_FALSE(is_mono(p0));
  EXPECT_TRUE(is_mono(unit_inclusion(p, {0})));
  EXPECT_EQ(kernel(p0).object, GradedObject::unit_on(p, {1}));
  EXPECT_EQ(cokernel(unit_inclusion(p, {0})).object, GradedObject::unit_on(p, {1}));
}

TEST(HomSpaces, BasisSizeAndSimpleDecomposition) {
  const Category c = fixture("pair3");
  Sampler s(15);
  for (int t = 0; t < 20; ++t) {
    const GradedObject v = s.object(c, 4), w = s.object(c, 4);
    EXPECT_EQ(hom_basis(v, w).size(), hom_dimension(v, w));
    std::size_t total = 0;
    for (auto [g, m] : decompose_simples(v)) {
      EXPECT_EQ(hom_dimension(GradedObject::simple(c, g), v), m);
      total += m;
    }
    EXPECT_EQ(total, v.total());
  }
  EXPECT_EQ(decompose_simples(GradedObject::unit(c)).size(), 3u);
}

TEST(DirectSums, InjectionsAndProjections) {
  const Category c = fixture("s3");
  Sampler s(16);
  const GradedObject v = s.object(c, 3), w = s.object(c, 3);
  const DirectSum d = direct_sum(v, w);
  EXPECT_TRUE(compose(d.project_first, d.inject_first).is_identity());
  EXPECT_TRUE(compose(d.project_second, d.inject_first).is_zero());
  EXPECT_TRUE(add(compose(d.inject_first, d.project_first), compose(d.inject_second, d.project_second)).is_identity());
  const GradedMorphism f = s.morphism(v, v), g = s.morphism(w, w);
  EXPECT_EQ(compose(direct_sum(f, g), d.inject_second), compose(d.inject_second, g));
}

TEST(Restriction, ComponentsAndCorners) {
  const Category p = fixture("pair2");
  const GradedObject all(p, {1, 2, 3, 4});
  EXPECT_EQ(component(all, 0, 1), GradedObject(p, {0, 2, 0, 0}));
  EXPECT_EQ(restrict_to(all, {1}), GradedObject(p, {0, 0, 0, 4}));
  EXPECT_TRUE(compose(component_projection(all, 1, 0), component_inclusion(all, 1, 0)).is_identity());
  EXPECT_TRUE(compose(unit_projection(p, {0}), unit_inclusion(p, {0})).is_identity());
  EXPECT_TRUE(lies_in(GradedObject::simple(p, 0), {0}));
  EXPECT_FALSE(lies_in(GradedObject::simple(p, 1), {0}));
  Sampler s(17);
  for (int t = 0; t < 20; ++t) {
    const GradedObject x = s.object(p, 3), y = s.object(p, 3), z = s.object(p, 3);
    const GradedMorphism f = s.morphism(x, y), g = s.morphism(y, z);
    EXPECT_EQ(restrict_to(compose(g, f), {0}), compose(restrict_to(g, {0}), restrict_to(f, {0})));
  }
}
