#pragma once

// Algebras and coalgebras internal to C, their validators, the canonical
// constructions used as a corpus, and the corner algebras A_J.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gcat/gvec.hpp"
#include "gcat/morphcalc.hpp"

namespace gcat {

/// unit : U -> carrier where U is the monoidal unit of the ambient category:
/// 1 for algebras in C, or 1_J for algebras in the full subcategory C_J.
struct InternalAlgebra {
  GradedObject carrier;
  GradedMorphism mult;
  GradedMorphism unit;
};

struct InternalCoalgebra {
  GradedObject carrier;
  GradedMorphism comult;
  GradedMorphism counit;
};

struct AxiomFailure {
  std::string equation;
  std::optional<std::size_t> grade;  // first grade where the two sides differ
  std::vector<std::size_t> grades;   // every grade where they differ
};

struct ValidationReport {
  bool zero = false;
  std::vector<AxiomFailure> failures;

  bool valid() const noexcept { return failures.empty(); }
};

namespace detail {

inline std::vector<std::size_t> differing_grades(const GradedMorphism& a, const GradedMorphism& b) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < a.blocks().size(); ++g)
    if (!(a.block(g) == b.block(g))) out.push_back(g);
  return out;
}

inline void expect_equal(ValidationReport& r, const char* equation, const GradedMorphism& lhs, const GradedMorphism& rhs) {
  auto gs = differing_grades(lhs, rhs);
  if (!gs.empty()) r.failures.push_back({equation, gs.front(), std::move(gs)});
}

}  // namespace detail

inline ValidationReport validate_algebra(const InternalAlgebra& a) {
  ValidationReport r;
  const GradedObject& A = a.carrier;
  const GradedObject& U = a.unit.source();
  r.zero = A.is_zero();
  if (!(a.mult.source() == tensor(A, A)) || !(a.mult.target() == A)) r.failures.push_back({"mult has shape A(x)A -> A", {}, {}});
  if (!(a.unit.target() == A)) r.failures.push_back({"unit lands in A", {}, {}});
  if (!(tensor(U, A) == A) || !(tensor(A, U) == A)) r.failures.push_back({"unit source acts as a strict unit on A", {}, {}});
  if (!r.failures.empty()) return r;

  const GradedMorphism id = GradedMorphism::identity(A);
  detail::expect_equal(r, "associativity", compose(a.mult, tensor(a.mult, id)),
                       compose(a.mult, tensor(id, a.mult), associator(A, A, A)));
  detail::expect_equal(r, "left unit", compose(a.mult, tensor(a.unit, id)), id);
  detail::expect_equal(r, "right unit", compose(a.mult, tensor(id, a.unit)), id);
  return r;
}

inline ValidationReport validate_coalgebra(const InternalCoalgebra& c) {
  ValidationReport r;
  const GradedObject& C = c.carrier;
  const GradedObject& U = c.counit.target();
  r.zero = C.is_zero();
  if (!(c.comult.target() == tensor(C, C)) || !(c.comult.source() == C))
    r.failures.push_back({"comult has shape C -> C(x)C", {}, {}});
  if (!(c.counit.source() == C)) r.failures.push_back({"counit leaves C", {}, {}});
  if (!(tensor(U, C) == C) || !(tensor(C, U) == C)) r.failures.push_back({"counit target acts as a strict unit on C", {}, {}});
  if (!r.failures.empty()) return r;

  const GradedMorphism id = GradedMorphism::identity(C);
  detail::expect_equal(r, "coassociativity", compose(associator(C, C, C), tensor(c.comult, id), c.comult),
                       compose(tensor(id, c.comult), c.comult));
  detail::expect_equal(r, "left counit", compose(tensor(c.counit, id), c.comult), id);
  detail::expect_equal(r, "right counit", compose(tensor(id, c.counit), c.comult), id);
  return r;
}

inline void require_valid(const InternalAlgebra& a, const char* where) {
  if (!validate_algebra(a).valid()) throw ValidationError({std::string(where) + ": input is not an algebra"});
}
inline void require_valid(const InternalCoalgebra& c, const char* where) {
  if (!validate_coalgebra(c).valid()) throw ValidationError({std::string(where) + ": input is not a coalgebra"});
}

// ---------------------------------------------------------------------------
// Constructions

/// 1 with identity multiplication and unit.
inline InternalAlgebra unit_algebra(const Category& c) {
  const GradedObject one = GradedObject::unit(c);
  const GradedMorphism id = GradedMorphism::identity(one);
  return {one, id, id};
}

inline InternalCoalgebra unit_coalgebra(const Category& c) {
  const GradedObject one = GradedObject::unit(c);
  const GradedMorphism id = GradedMorphism::identity(one);
  return {one, id, id};
}

/// 1_i as an algebra: 1_i (x) 1_i = 1_i, multiplication the identity, unit p_i.
inline InternalAlgebra unit_summand_algebra(const Category& c, std::size_t i) {
  if (i >= c->object_count()) throw std::out_of_range("unit summand index out of range");
  const GradedObject one_i = GradedObject::unit_on(c, {i});
  return {one_i, GradedMorphism::identity(one_i), unit_projection(c, {i})};
}

/// 1_i as a coalgebra: comultiplication the identity, counit i_i.
inline InternalCoalgebra unit_summand_coalgebra(const Category& c, std::size_t i) {
  if (i >= c->object_count()) throw std::out_of_range("unit summand index out of range");
  const GradedObject one_i = GradedObject::unit_on(c, {i});
  return {one_i, GradedMorphism::identity(one_i), unit_inclusion(c, {i})};
}

/// k[G_J]: one basis vector per arrow with both endpoints in J, multiplied by
/// composition. For J a single object with only its identity this is 1_i.
inline InternalAlgebra groupoid_algebra(const Category& c, std::vector<std::size_t> objects) {
  if (objects.empty()) throw std::invalid_argument("groupoid_algebra: empty object set");
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  const Groupoid& G = *c;
  const auto mask = object_mask(G, objects);
  std::vector<std::size_t> mult(G.arrow_count(), 0);
  for (std::size_t g = 0; g < mult.size(); ++g) mult[g] = mask[G.src(g)] && mask[G.tgt(g)] ? 1 : 0;
  const GradedObject A(c, std::move(mult));
  const GradedObject AA = tensor(A, A);
  const GradedObject one = GradedObject::unit(c);
  std::vector<Matrix> m, u;
  for (std::size_t k = 0; k < G.arrow_count(); ++k) {
    Matrix mk(A.mult(k), AA.mult(k));
    for (std::size_t j = 0; j < mk.cols(); ++j) mk(0, j) = 1;
    m.push_back(std::move(mk));
    Matrix uk(A.mult(k), one.mult(k));
    if (uk.rows() && uk.cols()) uk(0, 0) = 1;
    u.push_back(std::move(uk));
  }
  return {A, GradedMorphism(AA, A, std::move(m)), GradedMorphism(one, A, std::move(u))};
}

/// X (x) X* with multiplication id (x) ev (x) id and unit coev.
inline InternalAlgebra internal_end(const GradedObject& x) {
  if (x.is_zero()) throw std::invalid_argument("internal_end: zero object");
  const LeftDual d = left_dual(x);
  const GradedObject& xd = d.dual;
  const GradedObject A = tensor(x, xd);
  const GradedMorphism idx = GradedMorphism::identity(x);
  const GradedMorphism idxd = GradedMorphism::identity(xd);
  // (X X*)(X X*) -> X (X* (X X*)) -> X ((X* X) X*) -> X (1 X*) = X X*
  const GradedMorphism step1 = associator(x, xd, A);
  const GradedMorphism step2 = tensor(idx, associator_inverse(xd, x, xd));
  const GradedMorphism step3 = tensor(idx, tensor(d.ev, idxd));
  return {A, compose(step3, step2, step1), d.coev};
}

/// A (+) B with zero cross multiplication.
inline InternalAlgebra direct_sum(const InternalAlgebra& a, const InternalAlgebra& b) {
  const DirectSum s = direct_sum(a.carrier, b.carrier);
  const GradedMorphism ma = compose(s.inject_first, a.mult, tensor(s.project_first, s.project_first));
  const GradedMorphism mb = compose(s.inject_second, b.mult, tensor(s.project_second, s.project_second));
  const GradedMorphism u = add(compose(s.inject_first, a.unit), compose(s.inject_second, b.unit));
  return {s.object, add(ma, mb), u};
}

/// The dual coalgebra on A*: comultiplication (A(x)A)* -> A*(x)A* after m*,
/// counit u*.
inline InternalCoalgebra dualize_algebra(const InternalAlgebra& a) {
  require_valid(a, "dualize_algebra");
  const GradedMorphism comult = compose(dual_tensor_swap(a.carrier, a.carrier), dual(a.mult));
  return {dual(a.carrier), comult, dual(a.unit)};
}

// ---------------------------------------------------------------------------
// Support and corners

/// J = { i : A_ii != 0 }.
inline std::vector<std::size_t> support(const GradedObject& carrier) {
  const Groupoid& G = carrier.groupoid();
  std::vector<std::size_t> J;
  for (std::size_t i = 0; i < G.object_count(); ++i)
    if (!component(carrier, i, i).is_zero()) J.push_back(i);
  return J;
}

/// Support of an algebra, asserting that every component A_lj with l or j
/// outside J vanishes.
inline std::vector<std::size_t> support(const InternalAlgebra& a) {
  const auto J = support(a.carrier);
  if (!lies_in(a.carrier, J)) throw ConsistencyError("algebra has a nonzero component outside J x J");
  if (!a.carrier.is_zero() && J.empty()) throw ConsistencyError("nonzero algebra with empty support");
  return J;
}

inline std::vector<std::size_t> support(const InternalCoalgebra& c) {
  const auto J = support(c.carrier);
  if (!lies_in(c.carrier, J)) throw ConsistencyError("coalgebra has a nonzero component outside J x J");
  if (!c.carrier.is_zero() && J.empty()) throw ConsistencyError("nonzero coalgebra with empty support");
  return J;
}

/// A_J with structure in C_J (unit 1_J -> A_J), the inclusion i_{A_J}, and
/// the same carrier viewed as an algebra in C (unit u_{A_J} o p_J).
struct CornerAlgebra {
  std::vector<std::size_t> objects;
  InternalAlgebra in_subcategory;
  InternalAlgebra in_ambient;
  GradedMorphism inclusion;
};

inline CornerAlgebra restrict_to_J(const InternalAlgebra& a, std::vector<std::size_t> J) {
  if (J.empty()) throw std::invalid_argument("restrict_to_J: empty object set");
  std::sort(J.begin(), J.end());
  const Category& c = a.carrier.category();
  const GradedObject AJ = restrict_to(a.carrier, J);
  const GradedMorphism inc = restriction_inclusion(AJ, a.carrier);
  const GradedMorphism proj = restriction_projection(a.carrier, AJ);
  const GradedMorphism pJ = unit_projection(c, J);
  const GradedMorphism iJ = unit_inclusion(c, J);
  const GradedMorphism mJ = compose(proj, a.mult, tensor(inc, inc));
  const GradedMorphism uJ = compose(proj, a.unit, iJ);
  return {J, {AJ, mJ, uJ}, {AJ, mJ, compose(uJ, pJ)}, inc};
}

/// Checks i m_J = m (i (x) i) and i u_J p_J = u.
inline bool corner_equations_hold(const InternalAlgebra& a, const CornerAlgebra& corner) {
  const GradedMorphism& i = corner.inclusion;
  const GradedMorphism pJ = unit_projection(a.carrier.category(), corner.objects);
  return compose(i, corner.in_subcategory.mult) == compose(a.mult, tensor(i, i)) &&
         compose(i, corner.in_subcategory.unit, pJ) == a.unit;
}

/// Algebra-morphism test for f : A -> B (units may live over different unit
/// objects only if they coincide).
inline bool is_algebra_morphism(const GradedMorphism& f, const InternalAlgebra& a, const InternalAlgebra& b) {
  if (!(f.source() == a.carrier) || !(f.target() == b.carrier)) return false;
  return compose(f, a.mult) == compose(b.mult, tensor(f, f)) && compose(f, a.unit) == b.unit;
}

inline bool is_coalgebra_morphism(const GradedMorphism& f, const InternalCoalgebra& c, const InternalCoalgebra& d) {
  if (!(f.source() == c.carrier) || !(f.target() == d.carrier)) return false;
  return compose(d.comult, f) == compose(tensor(f, f), c.comult) && compose(d.counit, f) == c.counit;
}

/// C_J with comultiplication and counit in C_J, the projection p_{C_J}, and
/// the ambient coalgebra with counit i_J o eps_J.
struct CornerCoalgebra {
  std::vector<std::size_t> objects;
  InternalCoalgebra in_subcategory;
  InternalCoalgebra in_ambient;
  GradedMorphism projection;
};

inline CornerCoalgebra restrict_to_J(const InternalCoalgebra& c, std::vector<std::size_t> J) {
  if (J.empty()) throw std::invalid_argument("restrict_to_J: empty object set");
  std::sort(J.begin(), J.end());
  const Category& cat = c.carrier.category();
  const GradedObject CJ = restrict_to(c.carrier, J);
  const GradedMorphism inc = restriction_inclusion(CJ, c.carrier);
  const GradedMorphism proj = restriction_projection(c.carrier, CJ);
  const GradedMorphism dJ = compose(tensor(proj, proj), c.comult, inc);
  const GradedMorphism eJ = compose(unit_projection(cat, J), c.counit, inc);
  return {J, {CJ, dJ, eJ}, {CJ, dJ, compose(unit_inclusion(cat, J), eJ)}, proj};
}

}  // namespace gcat
