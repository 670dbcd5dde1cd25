#pragma once

// Seeded generators for objects, morphisms and object subsets. Draws go
// through a fixed reduction of mt19937_64 output rather than the standard
// distributions so that sequences do not depend on the C++ library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "gcat/gvec.hpp"

namespace gcat {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin(std::uint64_t num, std::uint64_t den) { return engine_() % den < num; }

  /// Total multiplicity in [1, max_total] spread over random grades.
  GradedObject object(const Category& c, std::size_t max_total, bool allow_zero = false) {
    std::vector<std::size_t> mult(c->arrow_count(), 0);
    const std::size_t total = allow_zero ? index(max_total + 1) : 1 + index(max_total);
    for (std::size_t t = 0; t < total; ++t) ++mult[index(mult.size())];
    return {c, std::move(mult)};
  }

  /// Object supported on grades with both endpoints in `objects`.
  GradedObject object_in(const Category& c, const std::vector<std::size_t>& objects, std::size_t max_total) {
    const auto mask = object_mask(*c, objects);
    std::vector<std::size_t> grades;
    for (std::size_t g = 0; g < c->arrow_count(); ++g)
      if (mask[c->src(g)] && mask[c->tgt(g)]) grades.push_back(g);
    std::vector<std::size_t> mult(c->arrow_count(), 0);
    const std::size_t total = 1 + index(max_total);
    for (std::size_t t = 0; t < total; ++t) ++mult[grades[index(grades.size())]];
    return {c, std::move(mult)};
  }

  /// Small rational entry: mostly integers in [-2, 2], sometimes p/q.
  Rational entry() {
    if (coin(1, 3)) return 0;
    if (coin(1, 5)) return make_rational(integer(-3, 3), integer(1, 3));
    return integer(-2, 2);
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    // One in three blocks is built as a product through a narrower space so
    // that rank deficiency is common.
    if (rows && cols && coin(1, 3)) {
      const std::size_t inner = index(std::min(rows, cols));
      return matmul(plain_matrix(rows, inner), plain_matrix(inner, cols));
    }
    return plain_matrix(rows, cols);
  }

  GradedMorphism morphism(const GradedObject& source, const GradedObject& target) {
    std::vector<Matrix> blocks;
    for (std::size_t g = 0; g < source.grade_count(); ++g) blocks.push_back(matrix(target.mult(g), source.mult(g)));
    return {source, target, std::move(blocks)};
  }

  /// Random morphism between random objects of total multiplicity <= max_total.
  GradedMorphism morphism(const Category& c, std::size_t max_total) {
    const GradedObject s = object(c, max_total, true);
    const GradedObject t = object(c, max_total, true);
    return morphism(s, t);
  }

  /// Nonempty subset of {0, ..., n-1}, sorted.
  std::vector<std::size_t> subset(std::size_t n) {
    std::vector<std::size_t> out;
    while (out.empty())
      for (std::size_t i = 0; i < n; ++i)
        if (coin(1, 2)) out.push_back(i);
    return out;
  }

 private:
  Matrix plain_matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry();
    return m;
  }

  std::mt19937_64 engine_;
};

}  // namespace gcat
