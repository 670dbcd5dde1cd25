#pragma once

// The free-module functor - (x) A : C -> C_A, its coalgebra mirror
// - (x) C : C -> C^C, and the inclusion/projection functors L_J, R_J.
//
// Module morphisms between free modules are parametrized by
// Hom_A(M (x) A, N (x) A) ~ Hom(M, N (x) A), so every question about C_A
// asked here reduces to a linear system in C.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcat/gvec.hpp"
#include "gcat/internal.hpp"
#include "gcat/morphcalc.hpp"

namespace gcat {

// ---------------------------------------------------------------------------
// Modules and comodules

struct ModuleObject {
  GradedObject carrier;
  GradedMorphism action;  // carrier (x) A -> carrier
};

struct ComoduleObject {
  GradedObject carrier;
  GradedMorphism coaction;  // carrier -> carrier (x) C
};

/// (M (x) A, (id_M (x) m) o a_{M,A,A}).
inline ModuleObject free_module(const GradedObject& m, const InternalAlgebra& a) {
  const GradedObject& A = a.carrier;
  return {tensor(m, A), compose(tensor(GradedMorphism::identity(m), a.mult), associator(m, A, A))};
}

/// f (x) id_A.
inline GradedMorphism induce_mor(const GradedMorphism& f, const InternalAlgebra& a) {
  return tensor(f, GradedMorphism::identity(a.carrier));
}

inline bool validate_module(const ModuleObject& mod, const InternalAlgebra& a) {
  const GradedObject& M = mod.carrier;
  const GradedObject& A = a.carrier;
  const GradedMorphism idA = GradedMorphism::identity(A);
  const GradedMorphism idM = GradedMorphism::identity(M);
  if (!(tensor(M, a.unit.source()) == M)) return false;
  return compose(mod.action, tensor(mod.action, idA)) ==
             compose(mod.action, tensor(idM, a.mult), associator(M, A, A)) &&
         compose(mod.action, tensor(idM, a.unit)) == idM;
}

inline bool is_module_morphism(const GradedMorphism& g, const ModuleObject& from, const ModuleObject& to,
                               const InternalAlgebra& a) {
  return compose(g, from.action) == compose(to.action, tensor(g, GradedMorphism::identity(a.carrier)));
}

/// The free-module morphism M (x) A -> N (x) A corresponding to rho : M -> N (x) A.
inline GradedMorphism free_module_morphism(const GradedMorphism& rho, const GradedObject& n, const InternalAlgebra& a) {
  const GradedObject& A = a.carrier;
  if (!(rho.target() == tensor(n, A))) throw ShapeError("free_module_morphism: rho must land in N (x) A");
  return compose(tensor(GradedMorphism::identity(n), a.mult), associator(n, A, A),
                 tensor(rho, GradedMorphism::identity(A)));
}

/// (M (x) C, a^{-1}_{M,C,C} o (id_M (x) Delta)).
inline ComoduleObject cofree_comodule(const GradedObject& m, const InternalCoalgebra& c) {
  const GradedObject& C = c.carrier;
  return {tensor(m, C), compose(associator_inverse(m, C, C), tensor(GradedMorphism::identity(m), c.comult))};
}

inline GradedMorphism induce_mor(const GradedMorphism& f, const InternalCoalgebra& c) {
  return tensor(f, GradedMorphism::identity(c.carrier));
}

inline bool validate_comodule(const ComoduleObject& mod, const InternalCoalgebra& c) {
  const GradedObject& M = mod.carrier;
  const GradedObject& C = c.carrier;
  const GradedMorphism idC = GradedMorphism::identity(C);
  const GradedMorphism idM = GradedMorphism::identity(M);
  if (!(tensor(M, c.counit.target()) == M)) return false;
  return compose(tensor(mod.coaction, idC), mod.coaction) ==
             compose(associator_inverse(M, C, C), tensor(idM, c.comult), mod.coaction) &&
         compose(tensor(idM, c.counit), mod.coaction) == idM;
}

/// The cofree-comodule morphism M (x) C -> N (x) C corresponding to sigma : M (x) C -> N.
inline GradedMorphism cofree_comodule_morphism(const GradedMorphism& sigma, const GradedObject& m,
                                               const InternalCoalgebra& c) {
  const GradedObject& C = c.carrier;
  if (!(sigma.source() == tensor(m, C))) throw ShapeError("cofree_comodule_morphism: sigma must leave M (x) C");
  return compose(tensor(sigma, GradedMorphism::identity(C)), associator_inverse(m, C, C),
                 tensor(GradedMorphism::identity(m), c.comult));
}

// ---------------------------------------------------------------------------
// Split questions in C_A and C^C

namespace detail {

/// Solves sum_b x_b * images[b] = goal over Q, blockwise flattened.
inline bool in_span(const std::vector<GradedMorphism>& images, const GradedMorphism& goal) {
  std::size_t len = 0;
  for (const auto& blk : goal.blocks()) len += blk.rows() * blk.cols();
  Matrix system(len, images.size());
  Matrix rhs(len, 1);
  auto flatten = [](const GradedMorphism& f, Matrix& out, std::size_t col) {
    std::size_t row = 0;
    for (const auto& blk : f.blocks())
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j) out(row++, col) = blk(i, j);
  };
  for (std::size_t b = 0; b < images.size(); ++b) flatten(images[b], system, b);
  flatten(goal, rhs, 0);
  return solve_right(system, rhs).has_value();
}

}  // namespace detail

/// Is f (x) A split-mono as a morphism of free A-modules?
inline bool induced_split_mono_in_modules(const GradedMorphism& f, const InternalAlgebra& a) {
  // r ranges over module maps N(x)A -> M(x)A, parametrized by Hom(N, M(x)A).
  const GradedObject MA = tensor(f.source(), a.carrier);
  const GradedMorphism fa = induce_mor(f, a);
  std::vector<GradedMorphism> images;
  for (const auto& rho : hom_basis(f.target(), MA))
    images.push_back(compose(free_module_morphism(rho, f.source(), a), fa));
  return detail::in_span(images, GradedMorphism::identity(MA));
}

inline bool induced_split_epi_in_modules(const GradedMorphism& f, const InternalAlgebra& a) {
  const GradedObject MA = tensor(f.source(), a.carrier);
  const GradedObject NA = tensor(f.target(), a.carrier);
  const GradedMorphism fa = induce_mor(f, a);
  std::vector<GradedMorphism> images;
  for (const auto& rho : hom_basis(f.target(), MA))
    images.push_back(compose(fa, free_module_morphism(rho, f.source(), a)));
  return detail::in_span(images, GradedMorphism::identity(NA));
}

inline bool induced_split_mono_in_comodules(const GradedMorphism& f, const InternalCoalgebra& c) {
  const GradedObject MC = tensor(f.source(), c.carrier);
  const GradedObject NC = tensor(f.target(), c.carrier);
  const GradedMorphism fc = induce_mor(f, c);
  std::vector<GradedMorphism> images;
  for (const auto& sigma : hom_basis(NC, f.source()))
    images.push_back(compose(cofree_comodule_morphism(sigma, f.target(), c), fc));
  return detail::in_span(images, GradedMorphism::identity(MC));
}

inline bool induced_split_epi_in_comodules(const GradedMorphism& f, const InternalCoalgebra& c) {
  const GradedObject NC = tensor(f.target(), c.carrier);
  const GradedMorphism fc = induce_mor(f, c);
  std::vector<GradedMorphism> images;
  for (const auto& sigma : hom_basis(NC, f.source()))
    images.push_back(compose(fc, cofree_comodule_morphism(sigma, f.target(), c)));
  return detail::in_span(images, GradedMorphism::identity(NC));
}

// ---------------------------------------------------------------------------
// Separability

struct SeparabilityVerdict {
  bool separable = false;
  bool semiseparable = false;
  bool naturally_full = false;
  std::optional<SplitWitness> witness;  // retraction (algebras) or section (coalgebras)
  bool idempotent_trivial = false;
};

inline void require_nonzero(const GradedObject& carrier, const char* where) {
  if (carrier.is_zero()) throw std::invalid_argument(std::string(where) + ": zero (co)algebra");
}

/// The idempotent id_M (x) (psi' o psi), with u_A = phi o psi the image
/// factorization and psi' a section of psi.
inline GradedMorphism idempotent_e(const InternalAlgebra& a, const GradedObject& m) {
  const RegularSplitting sp = regular_splitting(a.unit);
  return tensor(GradedMorphism::identity(m), compose(sp.psi_section, sp.image.psi));
}

/// nu_M o eta_M with eta_M = M (x) u_A and nu_M = M (x) (psi' phi'); equals
/// idempotent_e by phi' phi = id. Kept separate as a cross-check.
inline GradedMorphism idempotent_via_unit(const InternalAlgebra& a, const GradedObject& m) {
  const RegularSplitting sp = regular_splitting(a.unit);
  const GradedMorphism idm = GradedMorphism::identity(m);
  const GradedMorphism eta = tensor(idm, a.unit);
  const GradedMorphism nu = tensor(idm, compose(sp.psi_section, sp.phi_retraction));
  return compose(nu, eta);
}

inline SeparabilityVerdict separability_verdict(const InternalAlgebra& a) {
  require_nonzero(a.carrier, "separability_verdict");
  SeparabilityVerdict v;
  auto r = find_retraction(a.unit);
  v.separable = r.has_value();
  v.naturally_full = find_section(a.unit).has_value();
  v.semiseparable = is_regular(a.unit);
  v.witness = std::move(r);
  v.idempotent_trivial = idempotent_e(a, a.unit.source()).is_identity();
  return v;
}

inline SeparabilityVerdict coseparability_verdict(const InternalCoalgebra& c) {
  require_nonzero(c.carrier, "coseparability_verdict");
  SeparabilityVerdict v;
  auto s = find_section(c.counit);
  v.separable = s.has_value();
  v.naturally_full = find_retraction(c.counit).has_value();
  v.semiseparable = is_regular(c.counit);
  v.witness = std::move(s);
  const RegularSplitting sp = regular_splitting(c.counit);
  v.idempotent_trivial = compose(sp.image.phi, sp.phi_retraction).is_identity();
  return v;
}

/// P(g) = (id_N (x) r) o g o (id_M (x) u_A) for g : M (x) A -> N (x) A.
inline GradedMorphism section_of_hom(const InternalAlgebra& a, const GradedMorphism& r, const GradedMorphism& g,
                                     const GradedObject& m, const GradedObject& n) {
  return compose(tensor(GradedMorphism::identity(n), r), g, tensor(GradedMorphism::identity(m), a.unit));
}

/// The coalgebra analogue (id_N (x) eps) o g o (id_M (x) s).
inline GradedMorphism section_of_hom(const InternalCoalgebra& c, const GradedMorphism& s, const GradedMorphism& g,
                                     const GradedObject& m, const GradedObject& n) {
  return compose(tensor(GradedMorphism::identity(n), c.counit), g, tensor(GradedMorphism::identity(m), s));
}

struct SectionCheck {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<GradedMorphism> counterexample;
};

/// Verifies P(f (x) A) = f for every sample f. `r` may be any weak inverse of
/// u_A; the identity can only hold when it is a true retraction.
inline SectionCheck check_section_identity(const InternalAlgebra& a, const GradedMorphism& r,
                                           const std::vector<GradedMorphism>& samples) {
  if (!(r.source() == a.carrier) || !(r.target() == a.unit.source()))
    throw std::invalid_argument("check_section_identity: r must map A to the unit");
  if (!(compose(a.unit, r, a.unit) == a.unit)) throw std::invalid_argument("check_section_identity: r is not a weak inverse of u_A");
  SectionCheck out;
  for (const auto& f : samples) {
    ++out.checked;
    const GradedMorphism p = section_of_hom(a, r, induce_mor(f, a), f.source(), f.target());
    if (!(p == f)) {
      out.passed = false;
      out.counterexample = f;
      return out;
    }
  }
  return out;
}

inline SectionCheck check_section_identity(const InternalCoalgebra& c, const GradedMorphism& s,
                                           const std::vector<GradedMorphism>& samples) {
  if (!(s.target() == c.carrier) || !(s.source() == c.counit.target()))
    throw std::invalid_argument("check_section_identity: s must map the unit to C");
  if (!(compose(c.counit, s, c.counit) == c.counit))
    throw std::invalid_argument("check_section_identity: s is not a weak inverse of eps_C");
  SectionCheck out;
  for (const auto& f : samples) {
    ++out.checked;
    const GradedMorphism p = section_of_hom(c, s, induce_mor(f, c), f.source(), f.target());
    if (!(p == f)) {
      out.passed = false;
      out.counterexample = f;
      return out;
    }
  }
  return out;
}

/// Naturality of P in both variables on explicit morphisms:
/// P(g o (h (x) A)) = P(g) o h and P((k (x) A) o g) = k o P(g).
inline bool section_is_natural(const InternalAlgebra& a, const GradedMorphism& r, const GradedMorphism& g,
                               const GradedMorphism& h, const GradedMorphism& k) {
  const GradedObject M = h.target(), N = k.source();
  const GradedMorphism pg = section_of_hom(a, r, g, M, N);
  return section_of_hom(a, r, compose(g, induce_mor(h, a)), h.source(), N) == compose(pg, h) &&
         section_of_hom(a, r, compose(induce_mor(k, a), g), M, k.target()) == compose(k, pg);
}

// ---------------------------------------------------------------------------
// Faithfulness and reflection

/// A simple whose image under - (x) X vanishes, i.e. an object j with no
/// grade of X starting at j. The witness morphism is id_{1_j}.
inline std::optional<std::size_t> annihilated_object(const GradedObject& x) {
  const Groupoid& G = x.groupoid();
  std::vector<bool> hit(G.object_count(), false);
  for (auto g : x.support()) hit[G.src(g)] = true;
  for (std::size_t j = 0; j < hit.size(); ++j)
    if (!hit[j]) return j;
  return std::nullopt;
}

struct FaithfulVerdict {
  bool faithful = true;
  std::optional<GradedMorphism> witness;  // nonzero f with f (x) X = 0
};

inline FaithfulVerdict faithful_for_carrier(const GradedObject& x, const std::vector<GradedMorphism>& samples) {
  FaithfulVerdict v;
  if (auto j = annihilated_object(x)) {
    const GradedObject s = GradedObject::unit_on(x.category(), {*j});
    v.faithful = false;
    v.witness = GradedMorphism::identity(s);
    return v;
  }
  const GradedMorphism idx = GradedMorphism::identity(x);
  for (const auto& f : samples)
    if (!f.is_zero() && tensor(f, idx).is_zero())
      throw ConsistencyError("nonzero morphism annihilated although every simple survives");
  return v;
}

inline FaithfulVerdict is_faithful_tensor(const InternalAlgebra& a, const std::vector<GradedMorphism>& samples = {}) {
  require_nonzero(a.carrier, "is_faithful_tensor");
  return faithful_for_carrier(a.carrier, samples);
}

inline FaithfulVerdict is_faithful_cotensor(const InternalCoalgebra& c, const std::vector<GradedMorphism>& samples = {}) {
  require_nonzero(c.carrier, "is_faithful_cotensor");
  return faithful_for_carrier(c.carrier, samples);
}

struct ReflectionVerdict {
  bool maschke = true;
  bool dual_maschke = true;
  bool conservative = true;
  std::optional<GradedMorphism> maschke_witness;       // f not split-mono, f (x) A split-mono
  std::optional<GradedMorphism> dual_maschke_witness;  // f not split-epi, f (x) A split-epi
  std::optional<GradedMorphism> conservative_witness;  // f not iso, f (x) A iso
  std::size_t sampled = 0;
};

namespace detail {

template <typename SplitMonoUp, typename SplitEpiUp, typename Induce>
ReflectionVerdict reflection(const GradedObject& carrier, const std::vector<GradedMorphism>& samples, SplitMonoUp mono_up,
                             SplitEpiUp epi_up, Induce induce) {
  ReflectionVerdict v;
  if (auto j = annihilated_object(carrier)) {
    const Category& c = carrier.category();
    const GradedObject s = GradedObject::unit_on(c, {*j});
    const GradedObject z = GradedObject::zero(c);
    v.maschke = v.dual_maschke = v.conservative = false;
    v.maschke_witness = GradedMorphism::zero(s, z);
    v.dual_maschke_witness = GradedMorphism::zero(z, s);
    v.conservative_witness = GradedMorphism::zero(s, z);
    return v;
  }
  for (const auto& f : samples) {
    ++v.sampled;
    if (!is_split_mono(f) && mono_up(f)) {
      v.maschke = false;
      v.maschke_witness = f;
    }
    if (!is_split_epi(f) && epi_up(f)) {
      v.dual_maschke = false;
      v.dual_maschke_witness = f;
    }
    if (!is_iso(f) && is_iso(induce(f))) {
      v.conservative = false;
      v.conservative_witness = f;
    }
  }
  if (!v.maschke || !v.dual_maschke || !v.conservative)
    throw ConsistencyError("reflection fails although every simple survives");
  return v;
}

}  // namespace detail

inline ReflectionVerdict reflection_checks(const InternalAlgebra& a, const std::vector<GradedMorphism>& samples = {}) {
  require_nonzero(a.carrier, "reflection_checks");
  return detail::reflection(
      a.carrier, samples, [&](const GradedMorphism& f) { return induced_split_mono_in_modules(f, a); },
      [&](const GradedMorphism& f) { return induced_split_epi_in_modules(f, a); },
      [&](const GradedMorphism& f) { return induce_mor(f, a); });
}

inline ReflectionVerdict coreflection_checks(const InternalCoalgebra& c, const std::vector<GradedMorphism>& samples = {}) {
  require_nonzero(c.carrier, "coreflection_checks");
  return detail::reflection(
      c.carrier, samples, [&](const GradedMorphism& f) { return induced_split_mono_in_comodules(f, c); },
      [&](const GradedMorphism& f) { return induced_split_epi_in_comodules(f, c); },
      [&](const GradedMorphism& f) { return induce_mor(f, c); });
}

// ---------------------------------------------------------------------------
// Monoidal functor data and L_J, R_J

/// F : D -> E with lax structure phi, phi0 and colax structure psi, psi0.
/// Objects of D and E are both graded objects over the same groupoid; D is
/// C_J or C, with its own unit object.
struct MonoidalFunctorData {
  GradedObject source_unit;
  GradedObject target_unit;
  std::function<GradedObject(const GradedObject&)> on_object;
  std::function<GradedMorphism(const GradedMorphism&)> on_morphism;
  std::function<GradedMorphism(const GradedObject&, const GradedObject&)> phi;  // FX (x) FY -> F(X (x) Y)
  std::function<GradedMorphism(const GradedObject&, const GradedObject&)> psi;  // F(X (x) Y) -> FX (x) FY
  GradedMorphism phi0;                                                          // 1_E -> F(1_D)
  GradedMorphism psi0;                                                          // F(1_D) -> 1_E
};

struct FunctorAxiomFailure {
  std::string axiom;
};

inline std::vector<FunctorAxiomFailure> check_lax(const MonoidalFunctorData& F, const GradedObject& x, const GradedObject& y,
                                                  const GradedObject& z) {
  std::vector<FunctorAxiomFailure> out;
  const GradedObject fx = F.on_object(x), fy = F.on_object(y), fz = F.on_object(z);
  const GradedMorphism lhs = compose(F.on_morphism(associator(x, y, z)), F.phi(tensor(x, y), z),
                                     tensor(F.phi(x, y), GradedMorphism::identity(fz)));
  const GradedMorphism rhs = compose(F.phi(x, tensor(y, z)), tensor(GradedMorphism::identity(fx), F.phi(y, z)),
                                     associator(fx, fy, fz));
  if (!(lhs == rhs)) out.push_back({"lax associativity"});
  if (!(compose(F.phi(F.source_unit, x), tensor(F.phi0, GradedMorphism::identity(fx))).is_identity()))
    out.push_back({"lax left unitality"});
  if (!(compose(F.phi(x, F.source_unit), tensor(GradedMorphism::identity(fx), F.phi0)).is_identity()))
    out.push_back({"lax right unitality"});
  return out;
}

inline std::vector<FunctorAxiomFailure> check_colax(const MonoidalFunctorData& F, const GradedObject& x,
                                                    const GradedObject& y, const GradedObject& z) {
  std::vector<FunctorAxiomFailure> out;
  const GradedObject fx = F.on_object(x), fy = F.on_object(y), fz = F.on_object(z);
  const GradedMorphism lhs = compose(associator(fx, fy, fz), tensor(F.psi(x, y), GradedMorphism::identity(fz)),
                                     F.psi(tensor(x, y), z));
  const GradedMorphism rhs = compose(tensor(GradedMorphism::identity(fx), F.psi(y, z)), F.psi(x, tensor(y, z)),
                                     F.on_morphism(associator(x, y, z)));
  if (!(lhs == rhs)) out.push_back({"colax coassociativity"});
  if (!(compose(tensor(F.psi0, GradedMorphism::identity(fx)), F.psi(F.source_unit, x)).is_identity()))
    out.push_back({"colax left counitality"});
  if (!(compose(tensor(GradedMorphism::identity(fx), F.psi0), F.psi(x, F.source_unit)).is_identity()))
    out.push_back({"colax right counitality"});
  return out;
}

inline std::vector<FunctorAxiomFailure> check_frobenius(const MonoidalFunctorData& F, const GradedObject& x,
                                                        const GradedObject& y, const GradedObject& z) {
  std::vector<FunctorAxiomFailure> out;
  const GradedObject fx = F.on_object(x), fy = F.on_object(y), fz = F.on_object(z);
  const GradedMorphism idfx = GradedMorphism::identity(fx), idfz = GradedMorphism::identity(fz);
  // (id (x) phi) a (psi (x) id) = psi F(a) phi
  const GradedMorphism l1 = compose(tensor(idfx, F.phi(y, z)), associator(fx, fy, fz), tensor(F.psi(x, y), idfz));
  const GradedMorphism r1 = compose(F.psi(x, tensor(y, z)), F.on_morphism(associator(x, y, z)), F.phi(tensor(x, y), z));
  if (!(l1 == r1)) out.push_back({"frobenius left square"});
  // (phi (x) id) a^{-1} (id (x) psi) = psi F(a^{-1}) phi
  const GradedMorphism l2 = compose(tensor(F.phi(x, y), idfz), associator_inverse(fx, fy, fz), tensor(idfx, F.psi(y, z)));
  const GradedMorphism r2 =
      compose(F.psi(tensor(x, y), z), F.on_morphism(associator_inverse(x, y, z)), F.phi(x, tensor(y, z)));
  if (!(l2 == r2)) out.push_back({"frobenius right square"});
  return out;
}

/// phi o psi = id on F(X (x) Y) and phi0 o psi0 = id.
inline std::vector<FunctorAxiomFailure> check_separable(const MonoidalFunctorData& F, const GradedObject& x,
                                                        const GradedObject& y) {
  std::vector<FunctorAxiomFailure> out;
  if (!compose(F.phi(x, y), F.psi(x, y)).is_identity()) out.push_back({"phi o psi = id"});
  if (!compose(F.phi0, F.psi0).is_identity()) out.push_back({"phi0 o psi0 = id"});
  return out;
}

inline std::vector<std::size_t> normalize_objects(std::vector<std::size_t> J, const Groupoid& G) {
  if (J.empty()) throw std::invalid_argument("empty object set");
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  if (J.back() >= G.object_count()) throw std::out_of_range("object index out of range");
  return J;
}

/// L_J : C_J -> C. Strong with identity tensor structure; phi0 = p_J, psi0 = i_J.
inline MonoidalFunctorData inclusion_LJ(const Category& c, std::vector<std::size_t> J) {
  J = normalize_objects(std::move(J), *c);
  MonoidalFunctorData F;
  F.source_unit = GradedObject::unit_on(c, J);
  F.target_unit = GradedObject::unit(c);
  F.on_object = [J](const GradedObject& x) {
    if (!lies_in(x, J)) throw std::invalid_argument("L_J applied to an object outside C_J");
    return x;
  };
  F.on_morphism = [](const GradedMorphism& f) { return f; };
  F.phi = [](const GradedObject& x, const GradedObject& y) { return GradedMorphism::identity(tensor(x, y)); };
  F.psi = F.phi;
  F.phi0 = unit_projection(c, J);
  F.psi0 = unit_inclusion(c, J);
  return F;
}

/// The slots of R(X) (x) R(Y) inside R(X (x) Y): pairs whose middle object lies in J.
inline GradedMorphism rj_middle_inclusion(const GradedObject& x, const GradedObject& y, const std::vector<std::size_t>& J) {
  const Groupoid& G = x.groupoid();
  const GradedObject rx = restrict_to(x, J), ry = restrict_to(y, J);
  const GradedObject src = tensor(rx, ry);
  const GradedObject tgt = restrict_to(tensor(x, y), J);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < G.arrow_count(); ++k) {
    Matrix b(tgt.mult(k), src.mult(k));
    if (src.mult(k))
      for (auto [g1, g2] : G.factorizations(k)) {
        const std::size_t n = rx.mult(g1) * ry.mult(g2);
        if (!n) continue;
        paste(b, Matrix::identity(n), slot_offset(x, y, k, g1), slot_offset(rx, ry, k, g1));
      }
    blocks.push_back(std::move(b));
  }
  return {src, tgt, std::move(blocks)};
}

/// R_J : C -> C_J, X |-> 1_J (x) X (x) 1_J. phi includes the pairs with middle
/// object in J, psi projects onto them; phi0 and psi0 are identities of 1_J.
inline MonoidalFunctorData projection_RJ(const Category& c, std::vector<std::size_t> J) {
  J = normalize_objects(std::move(J), *c);
  MonoidalFunctorData F;
  F.source_unit = GradedObject::unit(c);
  F.target_unit = GradedObject::unit_on(c, J);
  F.on_object = [J](const GradedObject& x) { return restrict_to(x, J); };
  F.on_morphism = [J](const GradedMorphism& f) { return restrict_to(f, J); };
  F.phi = [J](const GradedObject& x, const GradedObject& y) { return rj_middle_inclusion(x, y, J); };
  F.psi = [J](const GradedObject& x, const GradedObject& y) {
    const GradedMorphism i = rj_middle_inclusion(x, y, J);
    std::vector<Matrix> blocks;
    for (const auto& b : i.blocks()) blocks.push_back(transpose(b));
    return GradedMorphism(i.target(), i.source(), std::move(blocks));
  };
  F.phi0 = GradedMorphism::identity(F.target_unit);
  F.psi0 = F.phi0;
  return F;
}

struct FrobeniusPairCheck {
  bool passed = true;
  std::vector<std::string> failures;
};

/// For B in C_J and A in C: Hom(L_J B, A) ~ Hom(B, R_J A) via f |-> R_J(f)
/// with inverse g |-> i o g, and Hom(A, L_J B) ~ Hom(R_J A, B) via
/// f |-> f o i with inverse g |-> g o p, where i, p are the coordinate maps
/// of R_J A inside A. Checks bijectivity on full hom bases and naturality
/// against the supplied h : B' -> B (in C_J) and k : A -> A'.
inline FrobeniusPairCheck frobenius_pair_check(const std::vector<std::size_t>& J, const GradedObject& b,
                                               const GradedObject& a, const GradedMorphism& h, const GradedMorphism& k) {
  FrobeniusPairCheck out;
  auto fail = [&](std::string s) {
    out.passed = false;
    out.failures.push_back(std::move(s));
  };
  if (!lies_in(b, J) || !lies_in(h.source(), J) || !(h.target() == b) || !(k.source() == a))
    throw std::invalid_argument("frobenius_pair_check: bad sample shapes");
  const GradedObject ra = restrict_to(a, J);
  const GradedMorphism i = restriction_inclusion(ra, a);
  const GradedMorphism p = restriction_projection(a, ra);
  const GradedObject ra2 = restrict_to(k.target(), J);
  const GradedMorphism i2 = restriction_inclusion(ra2, k.target());
  const GradedMorphism p2 = restriction_projection(k.target(), ra2);

  // right adjunction direction: Hom(L B, A) -> Hom(B, R A)
  if (hom_dimension(b, a) != hom_dimension(b, ra)) fail("dim Hom(L_J B, A) != dim Hom(B, R_J A)");
  for (const auto& f : hom_basis(b, a)) {
    const GradedMorphism g = compose(p, f);
    if (!(restrict_to(f, J) == g)) fail("R_J(f) differs from p o f");
    if (!(compose(i, g) == f)) fail("i o R_J(f) != f");
    // naturality: Phi(k f h) = R(k) Phi(f) h
    if (!(compose(p2, k, f, h) == compose(restrict_to(k, J), g, h))) fail("naturality of Hom(L_J -, -)");
  }
  for (const auto& g : hom_basis(b, ra))
    if (!(compose(p, i, g) == g)) fail("R_J(i o g) != g");

  // left adjunction direction: Hom(A, L B) -> Hom(R A, B)
  if (hom_dimension(a, b) != hom_dimension(ra, b)) fail("dim Hom(A, L_J B) != dim Hom(R_J A, B)");
  for (const auto& f : hom_basis(a, b)) {
    const GradedMorphism g = compose(f, i);
    if (!(compose(g, p) == f)) fail("(f o i) o p != f");
  }
  for (const auto& g : hom_basis(ra, b))
    if (!(compose(g, p, i) == g)) fail("(g o p) o i != g");
  // naturality of the second bijection: (f o k) o i = (f o i2) o R_J(k)
  for (const auto& f : hom_basis(k.target(), b))
    if (!(compose(f, k, i) == compose(f, i2, restrict_to(k, J)))) fail("naturality of Hom(-, L_J B)");
  return out;
}

/// - (x) A_J : C_J -> (C_J)_{A_J} is separable for J = support(A).
inline bool restricted_separability(const InternalAlgebra& a) {
  require_nonzero(a.carrier, "restricted_separability");
  const auto J = support(a);
  const CornerAlgebra corner = restrict_to_J(a, J);
  if (!find_retraction(corner.in_subcategory.unit))
    throw ConsistencyError("unit of the corner algebra is not split-mono");
  return true;
}

inline bool restricted_coseparability(const InternalCoalgebra& c) {
  require_nonzero(c.carrier, "restricted_coseparability");
  const auto J = support(c);
  const CornerCoalgebra corner = restrict_to_J(c, J);
  if (!find_section(corner.in_subcategory.counit))
    throw ConsistencyError("counit of the corner coalgebra is not split-epi");
  return true;
}

}  // namespace gcat
