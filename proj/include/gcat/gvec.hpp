#pragma once

// The category C = Vec_G of finite-dimensional vector spaces graded by the
// arrows of a finite groupoid G.
//
// An object is a multiplicity vector over arrows; a morphism is one matrix per
// arrow ("grade"), of shape target multiplicity x source multiplicity. Grade g
// of V (x) W collects the composable pairs (g1, g2) with g1*g2 = g, in
// lexicographic order, each contributing a Kronecker block (left factor
// major). Unit constraints are identities on the nose. Associativity is NOT:
// (U (x) V) (x) W and U (x) (V (x) W) are the same object but enumerate their
// basis in different orders, related by the permutation `associator`.
//
// The simple objects are X_g (multiplicity 1 at g). The unit is
// 1 = sum over objects i of 1_i, with 1_i = X_{id_i}, and the component
// C_ij consists of grades with source i and target j.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcat/errors.hpp"
#include "gcat/exactlin.hpp"
#include "gcat/groupoid.hpp"

namespace gcat {

inline bool same_category(const Category& a, const Category& b) {
  return a == b || (a && b && a->fingerprint() == b->fingerprint());
}

class GradedObject {
 public:
  GradedObject() = default;
  GradedObject(Category category, std::vector<std::size_t> mult) : category_(std::move(category)), mult_(std::move(mult)) {
    if (!category_) throw InstanceError("graded object without a category");
    if (mult_.size() != category_->arrow_count()) throw ShapeError("multiplicity vector has wrong length");
  }

  static GradedObject zero(const Category& c) { return {c, std::vector<std::size_t>(c->arrow_count(), 0)}; }
  static GradedObject simple(const Category& c, std::size_t grade, std::size_t multiplicity = 1) {
    GradedObject v = zero(c);
    v.mult_.at(grade) = multiplicity;
    return v;
  }
  static GradedObject unit(const Category& c) {
    GradedObject v = zero(c);
    for (std::size_t i = 0; i < c->object_count(); ++i) v.mult_[c->identity(i)] = 1;
    return v;
  }
  /// 1_J, the sum of the unit summands 1_i for i in `objects`.
  static GradedObject unit_on(const Category& c, const std::vector<std::size_t>& objects) {
    GradedObject v = zero(c);
    for (auto i : objects) v.mult_.at(c->identity(i)) = 1;
    return v;
  }

  const Category& category() const noexcept { return category_; }
  const Groupoid& groupoid() const { return *category_; }
  std::size_t mult(std::size_t grade) const { return mult_.at(grade); }
  const std::vector<std::size_t>& mults() const noexcept { return mult_; }
  std::size_t grade_count() const noexcept { return mult_.size(); }

  std::size_t total() const {
    std::size_t t = 0;
    for (auto m : mult_) t += m;
    return t;
  }
  bool is_zero() const { return total() == 0; }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t g = 0; g < mult_.size(); ++g)
      if (mult_[g] > 0) s.push_back(g);
    return s;
  }

  friend bool operator==(const GradedObject& a, const GradedObject& b) {
    return same_category(a.category_, b.category_) && a.mult_ == b.mult_;
  }

 private:
  Category category_;
  std::vector<std::size_t> mult_;
};

inline void require_same_category(const GradedObject& a, const GradedObject& b, const char* op) {
  if (!same_category(a.category(), b.category())) throw InstanceError(std::string(op) + ": category mismatch");
}

class GradedMorphism {
 public:
  GradedMorphism() = default;

  /// One block per grade, shaped target.mult(g) x source.mult(g).
  GradedMorphism(GradedObject source, GradedObject target, std::vector<Matrix> blocks)
      : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
    require_same_category(source_, target_, "morphism");
    if (blocks_.size() != source_.grade_count()) throw ShapeError("morphism has wrong number of blocks");
    for (std::size_t g = 0; g < blocks_.size(); ++g)
      if (blocks_[g].rows() != target_.mult(g) || blocks_[g].cols() != source_.mult(g))
        throw ShapeError("block at grade " + std::to_string(g) + " has shape " + std::to_string(blocks_[g].rows()) +
                         "x" + std::to_string(blocks_[g].cols()) + ", expected " + std::to_string(target_.mult(g)) +
                         "x" + std::to_string(source_.mult(g)));
  }

  static GradedMorphism zero(const GradedObject& source, const GradedObject& target) {
    require_same_category(source, target, "zero");
    std::vector<Matrix> blocks;
    for (std::size_t g = 0; g < source.grade_count(); ++g) blocks.emplace_back(target.mult(g), source.mult(g));
    return {source, target, std::move(blocks)};
  }
  static GradedMorphism identity(const GradedObject& v) {
    std::vector<Matrix> blocks;
    for (std::size_t g = 0; g < v.grade_count(); ++g) blocks.push_back(Matrix::identity(v.mult(g)));
    return {v, v, std::move(blocks)};
  }

  const GradedObject& source() const noexcept { return source_; }
  const GradedObject& target() const noexcept { return target_; }
  const Category& category() const noexcept { return source_.category(); }
  const Matrix& block(std::size_t grade) const { return blocks_.at(grade); }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }

  bool is_zero() const {
    for (const auto& b : blocks_)
      if (!b.is_zero()) return false;
    return true;
  }
  bool is_identity() const {
    if (!(source_ == target_)) return false;
    for (const auto& b : blocks_)
      if (!b.is_identity()) return false;
    return true;
  }

  friend bool operator==(const GradedMorphism& a, const GradedMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
  }

 private:
  GradedObject source_;
  GradedObject target_;
  std::vector<Matrix> blocks_;
};

// ---------------------------------------------------------------------------
// Linear structure

/// after o before.
inline GradedMorphism compose(const GradedMorphism& after, const GradedMorphism& before) {
  if (!(before.target() == after.source())) throw ShapeError("compose: target of first map is not source of second");
  std::vector<Matrix> blocks;
  blocks.reserve(after.blocks().size());
  for (std::size_t g = 0; g < after.blocks().size(); ++g) blocks.push_back(matmul(after.block(g), before.block(g)));
  return {before.source(), after.target(), std::move(blocks)};
}

template <typename... Rest>
GradedMorphism compose(const GradedMorphism& a, const GradedMorphism& b, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0)
    return compose(a, b);
  else
    return compose(a, compose(b, rest...));
}

inline GradedMorphism add(const GradedMorphism& f, const GradedMorphism& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) throw ShapeError("add: morphisms are not parallel");
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < f.blocks().size(); ++k) blocks.push_back(add(f.block(k), g.block(k)));
  return {f.source(), f.target(), std::move(blocks)};
}

inline GradedMorphism subtract(const GradedMorphism& f, const GradedMorphism& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) throw ShapeError("subtract: morphisms are not parallel");
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < f.blocks().size(); ++k) blocks.push_back(subtract(f.block(k), g.block(k)));
  return {f.source(), f.target(), std::move(blocks)};
}

inline GradedMorphism scale(const Rational& s, const GradedMorphism& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) blocks.push_back(scale(s, b));
  return {f.source(), f.target(), std::move(blocks)};
}

// ---------------------------------------------------------------------------
// Tensor product

inline GradedObject tensor(const GradedObject& v, const GradedObject& w) {
  require_same_category(v, w, "tensor");
  const Groupoid& G = v.groupoid();
  std::vector<std::size_t> mult(G.arrow_count(), 0);
  for (std::size_t k = 0; k < mult.size(); ++k)
    for (auto [g1, g2] : G.factorizations(k)) mult[k] += v.mult(g1) * w.mult(g2);
  return {v.category(), std::move(mult)};
}

/// Position of the first basis vector of the (left_grade, *) block inside
/// grade k of v (x) w.
inline std::size_t slot_offset(const GradedObject& v, const GradedObject& w, std::size_t k, std::size_t left_grade) {
  std::size_t offset = 0;
  for (auto [g1, g2] : v.groupoid().factorizations(k)) {
    if (g1 == left_grade) return offset;
    offset += v.mult(g1) * w.mult(g2);
  }
  throw std::out_of_range("slot_offset: grade is not a left factor of k");
}

inline GradedMorphism tensor(const GradedMorphism& f, const GradedMorphism& h) {
  require_same_category(f.source(), h.source(), "tensor");
  const GradedObject source = tensor(f.source(), h.source());
  const GradedObject target = tensor(f.target(), h.target());
  const Groupoid& G = source.groupoid();
  std::vector<Matrix> blocks;
  blocks.reserve(G.arrow_count());
  for (std::size_t k = 0; k < G.arrow_count(); ++k) {
    Matrix b(target.mult(k), source.mult(k));
    std::size_t row = 0, col = 0;
    for (auto [g1, g2] : G.factorizations(k)) {
      const Matrix& x = f.block(g1);
      const Matrix& y = h.block(g2);
      if (!x.is_zero() && !y.is_zero()) paste(b, kron(x, y), row, col);
      row += x.rows() * y.rows();
      col += x.cols() * y.cols();
    }
    blocks.push_back(std::move(b));
  }
  return {source, target, std::move(blocks)};
}

/// a_{U,V,W} : (U (x) V) (x) W -> U (x) (V (x) W), a permutation matrix in
/// every grade sending each flattened basis triple to itself.
inline GradedMorphism associator(const GradedObject& u, const GradedObject& v, const GradedObject& w) {
  const GradedObject uv = tensor(u, v);
  const GradedObject vw = tensor(v, w);
  const GradedObject obj = tensor(uv, w);
  const Groupoid& G = obj.groupoid();
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < G.arrow_count(); ++k) {
    Matrix p(obj.mult(k), obj.mult(k));
    std::size_t col = 0;
    for (auto [h, g3] : G.factorizations(k)) {
      const std::size_t mw = w.mult(g3);
      if (uv.mult(h) == 0 || mw == 0) continue;
      for (auto [g1, g2] : G.factorizations(h)) {
        const std::size_t mu = u.mult(g1), mv = v.mult(g2);
        if (mu == 0 || mv == 0) continue;
        const std::size_t h2 = *G.compose(g2, g3);
        const std::size_t outer = slot_offset(u, vw, k, g1);
        const std::size_t inner = slot_offset(v, w, h2, g2);
        for (std::size_t a = 0; a < mu; ++a)
          for (std::size_t b = 0; b < mv; ++b)
            for (std::size_t c = 0; c < mw; ++c) {
              const std::size_t row = outer + a * vw.mult(h2) + inner + b * mw + c;
              p(row, col++) = 1;
            }
      }
    }
    blocks.push_back(std::move(p));
  }
  return {obj, obj, std::move(blocks)};
}

/// Inverse of `associator(u, v, w)`.
inline GradedMorphism associator_inverse(const GradedObject& u, const GradedObject& v, const GradedObject& w) {
  const GradedMorphism a = associator(u, v, w);
  std::vector<Matrix> blocks;
  for (const auto& b : a.blocks()) blocks.push_back(transpose(b));
  return {a.target(), a.source(), std::move(blocks)};
}

// ---------------------------------------------------------------------------
// Duality

inline GradedObject dual(const GradedObject& v) {
  const Groupoid& G = v.groupoid();
  std::vector<std::size_t> mult(G.arrow_count());
  for (std::size_t g = 0; g < mult.size(); ++g) mult[g] = v.mult(G.inverse(g));
  return {v.category(), std::move(mult)};
}

struct LeftDual {
  GradedObject dual;
  GradedMorphism ev;    // dual (x) v -> 1
  GradedMorphism coev;  // 1 -> v (x) dual
};

inline LeftDual left_dual(const GradedObject& v) {
  const Groupoid& G = v.groupoid();
  const GradedObject d = dual(v);
  const GradedObject one = GradedObject::unit(v.category());
  const GradedObject dv = tensor(d, v);
  const GradedObject vd = tensor(v, d);
  std::vector<Matrix> ev_blocks, coev_blocks;
  for (std::size_t k = 0; k < G.arrow_count(); ++k) {
    Matrix e(one.mult(k), dv.mult(k));
    Matrix c(vd.mult(k), one.mult(k));
    if (G.is_identity(k)) {
      std::size_t off = 0;
      for (auto [g1, g2] : G.factorizations(k)) {
        const std::size_t m = d.mult(g1);
        for (std::size_t a = 0; a < m; ++a) e(0, off + a * m + a) = 1;
        off += m * v.mult(g2);
      }
      off = 0;
      for (auto [g1, g2] : G.factorizations(k)) {
        const std::size_t m = v.mult(g1);
        for (std::size_t a = 0; a < m; ++a) c(off + a * m + a, 0) = 1;
        off += m * d.mult(g2);
      }
    }
    ev_blocks.push_back(std::move(e));
    coev_blocks.push_back(std::move(c));
  }
  return {d, GradedMorphism(dv, one, std::move(ev_blocks)), GradedMorphism(one, vd, std::move(coev_blocks))};
}

/// f* : W* -> V* for f : V -> W; in dual bases, the transpose of the block
/// at the inverse grade.
inline GradedMorphism dual(const GradedMorphism& f) {
  const Groupoid& G = f.source().groupoid();
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < G.arrow_count(); ++g) blocks.push_back(transpose(f.block(G.inverse(g))));
  return {dual(f.target()), dual(f.source()), std::move(blocks)};
}

/// Canonical (V (x) W)* -> W* (x) V*, sending the dual of v (x) w to w* (x) v*.
inline GradedMorphism dual_tensor_swap(const GradedObject& v, const GradedObject& w) {
  const Groupoid& G = v.groupoid();
  const GradedObject vd = dual(v), wd = dual(w);
  const GradedObject vw = tensor(v, w);
  const GradedObject source = dual(vw);
  const GradedObject target = tensor(wd, vd);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < G.arrow_count(); ++k) {
    Matrix p(target.mult(k), source.mult(k));
    const std::size_t kinv = G.inverse(k);
    std::size_t col = 0;
    for (auto [g1, g2] : G.factorizations(kinv)) {
      const std::size_t mv = v.mult(g1), mw = w.mult(g2);
      if (mv == 0 || mw == 0) continue;
      const std::size_t off = slot_offset(wd, vd, k, G.inverse(g2));
      for (std::size_t a = 0; a < mv; ++a)
        for (std::size_t b = 0; b < mw; ++b) p(off + b * mv + a, col++) = 1;
    }
    blocks.push_back(std::move(p));
  }
  return {source, target, std::move(blocks)};
}

// ---------------------------------------------------------------------------
// Abelian structure

inline bool is_mono(const GradedMorphism& f) {
  for (const auto& b : f.blocks())
    if (rank(b) != b.cols()) return false;
  return true;
}

inline bool is_epi(const GradedMorphism& f) {
  for (const auto& b : f.blocks())
    if (rank(b) != b.rows()) return false;
  return true;
}

inline bool is_iso(const GradedMorphism& f) { return is_mono(f) && is_epi(f); }

struct Kernel {
  GradedObject object;
  GradedMorphism inclusion;
};

inline Kernel kernel(const GradedMorphism& f) {
  std::vector<std::size_t> mult;
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) {
    blocks.push_back(kernel_basis(b));
    mult.push_back(blocks.back().cols());
  }
  GradedObject k(f.category(), std::move(mult));
  return {k, GradedMorphism(k, f.source(), std::move(blocks))};
}

/// The unique h' with kernel(f).inclusion o h' = h, or nullopt if f o h != 0.
inline std::optional<GradedMorphism> factor_through_kernel(const Kernel& k, const GradedMorphism& h) {
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < h.blocks().size(); ++g) {
    auto x = solve_right(k.inclusion.block(g), h.block(g));
    if (!x) return std::nullopt;
    blocks.push_back(std::move(*x));
  }
  return GradedMorphism(h.source(), k.object, std::move(blocks));
}

struct Cokernel {
  GradedObject object;
  GradedMorphism projection;
};

inline Cokernel cokernel(const GradedMorphism& f) {
  std::vector<std::size_t> mult;
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) {
    blocks.push_back(transpose(kernel_basis(transpose(b))));
    mult.push_back(blocks.back().rows());
  }
  GradedObject c(f.category(), std::move(mult));
  return {c, GradedMorphism(f.target(), c, std::move(blocks))};
}

/// f = phi o psi with psi : source -> image epi and phi : image -> target mono.
struct ImageFactorization {
  GradedObject image;
  GradedMorphism psi;
  GradedMorphism phi;
};

inline ImageFactorization image_factorization(const GradedMorphism& f) {
  std::vector<std::size_t> mult;
  std::vector<Matrix> psi, phi;
  for (const auto& b : f.blocks()) {
    auto rf = rank_factorization(b);
    mult.push_back(rf.row_factor.rows());
    phi.push_back(std::move(rf.column_factor));
    psi.push_back(std::move(rf.row_factor));
  }
  GradedObject im(f.category(), std::move(mult));
  return {im, GradedMorphism(f.source(), im, std::move(psi)), GradedMorphism(im, f.target(), std::move(phi))};
}

// ---------------------------------------------------------------------------
// Semisimple structure and hom-spaces

/// The simples of C are the X_g; an object's decomposition is its support.
inline std::vector<std::pair<std::size_t, std::size_t>> decompose_simples(const GradedObject& v) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (auto g : v.support()) out.emplace_back(g, v.mult(g));
  return out;
}

/// Matrix units ordered by (grade, row, column).
inline std::vector<GradedMorphism> hom_basis(const GradedObject& v, const GradedObject& w) {
  require_same_category(v, w, "hom_basis");
  std::vector<GradedMorphism> out;
  const GradedMorphism z = GradedMorphism::zero(v, w);
  for (std::size_t g = 0; g < v.grade_count(); ++g)
    for (std::size_t r = 0; r < w.mult(g); ++r)
      for (std::size_t c = 0; c < v.mult(g); ++c) {
        std::vector<Matrix> blocks = z.blocks();
        blocks[g](r, c) = 1;
        out.emplace_back(v, w, std::move(blocks));
      }
  return out;
}

inline std::size_t hom_dimension(const GradedObject& v, const GradedObject& w) {
  std::size_t d = 0;
  for (std::size_t g = 0; g < v.grade_count(); ++g) d += v.mult(g) * w.mult(g);
  return d;
}

struct DirectSum {
  GradedObject object;
  GradedMorphism inject_first, inject_second;
  GradedMorphism project_first, project_second;
};

/// Within each grade the slots of `v` come before those of `w`.
inline DirectSum direct_sum(const GradedObject& v, const GradedObject& w) {
  require_same_category(v, w, "direct_sum");
  std::vector<std::size_t> mult(v.grade_count());
  for (std::size_t g = 0; g < mult.size(); ++g) mult[g] = v.mult(g) + w.mult(g);
  GradedObject s(v.category(), std::move(mult));
  std::vector<Matrix> i1, i2, p1, p2;
  for (std::size_t g = 0; g < s.grade_count(); ++g) {
    Matrix a(s.mult(g), v.mult(g)), b(s.mult(g), w.mult(g));
    for (std::size_t x = 0; x < v.mult(g); ++x) a(x, x) = 1;
    for (std::size_t x = 0; x < w.mult(g); ++x) b(v.mult(g) + x, x) = 1;
    p1.push_back(transpose(a));
    p2.push_back(transpose(b));
    i1.push_back(std::move(a));
    i2.push_back(std::move(b));
  }
  return {s,
          GradedMorphism(v, s, std::move(i1)),
          GradedMorphism(w, s, std::move(i2)),
          GradedMorphism(s, v, std::move(p1)),
          GradedMorphism(s, w, std::move(p2))};
}

inline GradedMorphism direct_sum(const GradedMorphism& f, const GradedMorphism& g) {
  const DirectSum src = direct_sum(f.source(), g.source());
  const DirectSum tgt = direct_sum(f.target(), g.target());
  return add(compose(tgt.inject_first, f, src.project_first), compose(tgt.inject_second, g, src.project_second));
}

// ---------------------------------------------------------------------------
// Grade restrictions: components X_ij, X_J and the unit summands

/// The sub-object of v keeping only grades with src in `rows` and tgt in
/// `cols` (both given as membership masks over objects).
inline GradedObject restrict_grades(const GradedObject& v, const std::vector<bool>& src_in, const std::vector<bool>& tgt_in) {
  const Groupoid& G = v.groupoid();
  std::vector<std::size_t> mult(v.grade_count(), 0);
  for (std::size_t g = 0; g < mult.size(); ++g)
    if (src_in.at(G.src(g)) && tgt_in.at(G.tgt(g))) mult[g] = v.mult(g);
  return {v.category(), std::move(mult)};
}

inline std::vector<bool> object_mask(const Groupoid& G, const std::vector<std::size_t>& objects) {
  std::vector<bool> mask(G.object_count(), false);
  for (auto i : objects) mask.at(i) = true;
  return mask;
}

/// X_ij = 1_i (x) X (x) 1_j.
inline GradedObject component(const GradedObject& v, std::size_t i, std::size_t j) {
  const Groupoid& G = v.groupoid();
  return restrict_grades(v, object_mask(G, {i}), object_mask(G, {j}));
}

/// X_J = 1_J (x) X (x) 1_J.
inline GradedObject restrict_to(const GradedObject& v, const std::vector<std::size_t>& objects) {
  const auto mask = object_mask(v.groupoid(), objects);
  return restrict_grades(v, mask, mask);
}

/// Coordinate inclusion of a grade restriction `sub` of `v` (every grade of
/// sub has multiplicity 0 or v's multiplicity).
inline GradedMorphism restriction_inclusion(const GradedObject& sub, const GradedObject& v) {
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < v.grade_count(); ++g) {
    if (sub.mult(g) != 0 && sub.mult(g) != v.mult(g)) throw ShapeError("not a grade restriction");
    blocks.push_back(sub.mult(g) ? Matrix::identity(v.mult(g)) : Matrix(v.mult(g), 0));
  }
  return {sub, v, std::move(blocks)};
}

inline GradedMorphism restriction_projection(const GradedObject& v, const GradedObject& sub) {
  const GradedMorphism i = restriction_inclusion(sub, v);
  std::vector<Matrix> blocks;
  for (const auto& b : i.blocks()) blocks.push_back(transpose(b));
  return {v, sub, std::move(blocks)};
}

/// i_{X_ij} and p_{X_ij}.
inline GradedMorphism component_inclusion(const GradedObject& v, std::size_t i, std::size_t j) {
  return restriction_inclusion(component(v, i, j), v);
}
inline GradedMorphism component_projection(const GradedObject& v, std::size_t i, std::size_t j) {
  return restriction_projection(v, component(v, i, j));
}

/// i_J : 1_J -> 1 and p_J : 1 -> 1_J; with a single index these are i_i, p_i.
inline GradedMorphism unit_inclusion(const Category& c, const std::vector<std::size_t>& objects) {
  return restriction_inclusion(GradedObject::unit_on(c, objects), GradedObject::unit(c));
}
inline GradedMorphism unit_projection(const Category& c, const std::vector<std::size_t>& objects) {
  return restriction_projection(GradedObject::unit(c), GradedObject::unit_on(c, objects));
}

/// True when every grade in the support has both endpoints in `objects`.
inline bool lies_in(const GradedObject& v, const std::vector<std::size_t>& objects) {
  return restrict_to(v, objects) == v;
}

/// Blockwise restriction of a morphism to the grades of X_J; this is R_J(f).
inline GradedMorphism restrict_to(const GradedMorphism& f, const std::vector<std::size_t>& objects) {
  const GradedObject s = restrict_to(f.source(), objects);
  const GradedObject t = restrict_to(f.target(), objects);
  std::vector<Matrix> blocks;
  for (std::size_t g = 0; g < s.grade_count(); ++g)
    blocks.push_back(s.mult(g) && t.mult(g) ? f.block(g) : Matrix(t.mult(g), s.mult(g)));
  return {s, t, std::move(blocks)};
}

}  // namespace gcat
