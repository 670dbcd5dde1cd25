#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcat/io.hpp"

namespace gcat_test {

using namespace gcat;

inline Category fixture(const std::string& name) { return load_category(std::string(GCAT_FIXTURES) + "/" + name + ".json"); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"vec", "z2", "s3", "pair2", "pair3", "union_z2_z2"};
  return names;
}

inline Category z2() { return share(make_group({{0, 1}, {1, 0}})); }
inline Category pair2() { return share(make_pair_groupoid(2)); }

/// Brute-force view of an internal algebra as an ordinary algebra over Q.
/// Basis = all slots (grade, index) of the carrier; products are read off the
/// multiplication matrices by locating the (a, b) slot of A (x) A by hand,
/// without going through `slot_offset` or the associator.
struct PlainAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<Rational>>> c;  // e_a e_b = sum_k c[a][b][k] e_k
  std::vector<Rational> unit;

  std::vector<Rational> mul(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    std::vector<Rational> out(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      if (sgn(x[a]) == 0) continue;
      for (std::size_t b = 0; b < dim; ++b) {
        if (sgn(y[b]) == 0) continue;
        for (std::size_t k = 0; k < dim; ++k) out[k] += x[a] * y[b] * c[a][b][k];
      }
    }
    return out;
  }

  std::vector<Rational> basis(std::size_t a) const {
    std::vector<Rational> v(dim);
    v[a] = 1;
    return v;
  }

  bool valid() const {
    for (std::size_t a = 0; a < dim; ++a) {
      if (mul(unit, basis(a)) != basis(a) || mul(basis(a), unit) != basis(a)) return false;
      for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t k = 0; k < dim; ++k)
          if (mul(mul(basis(a), basis(b)), basis(k)) != mul(basis(a), mul(basis(b), basis(k)))) return false;
    }
    return true;
  }
};

inline PlainAlgebra plain(const InternalAlgebra& alg) {
  const GradedObject& A = alg.carrier;
  const Groupoid& G = A.groupoid();
  std::vector<std::size_t> first(G.arrow_count() + 1, 0);
  for (std::size_t g = 0; g < G.arrow_count(); ++g) first[g + 1] = first[g] + A.mult(g);
  PlainAlgebra p;
  p.dim = first.back();
  p.c.assign(p.dim, std::vector<std::vector<Rational>>(p.dim, std::vector<Rational>(p.dim)));
  for (std::size_t k = 0; k < G.arrow_count(); ++k) {
    std::size_t col = 0;
    for (std::size_t g1 = 0; g1 < G.arrow_count(); ++g1)
      for (std::size_t g2 = 0; g2 < G.arrow_count(); ++g2) {
        if (G.tgt(g1) != G.src(g2) || *G.compose(g1, g2) != k) continue;
        for (std::size_t i = 0; i < A.mult(g1); ++i)
          for (std::size_t j = 0; j < A.mult(g2); ++j, ++col)
            for (std::size_t r = 0; r < A.mult(k); ++r)
              p.c[first[g1] + i][first[g2] + j][first[k] + r] = alg.mult.block(k)(r, col);
      }
  }
  p.unit.assign(p.dim, 0);
  const GradedObject& U = alg.unit.source();
  for (std::size_t g = 0; g < G.arrow_count(); ++g)
    for (std::size_t s = 0; s < U.mult(g); ++s)
      for (std::size_t r = 0; r < A.mult(g); ++r) p.unit[first[g] + r] += alg.unit.block(g)(r, s);
  return p;
}

/// Replaces one entry of one block.
inline GradedMorphism with_entry(const GradedMorphism& f, std::size_t grade, std::size_t row, std::size_t col,
                                 const Rational& value) {
  std::vector<Matrix> blocks = f.blocks();
  blocks[grade](row, col) = value;
  return {f.source(), f.target(), std::move(blocks)};
}

}  // namespace gcat_test
