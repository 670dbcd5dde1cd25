#pragma once

// Split-mono / split-epi / regularity tests. Morphisms are grade-diagonal, so
// every search is a family of independent per-grade linear systems and a
// global witness exists iff each grade has one.

#include <optional>

#include "gcat/gvec.hpp"

namespace gcat {

enum class SplitKind { retraction, section, weak_inverse };

inline const char* to_string(SplitKind k) {
  switch (k) {
    case SplitKind::retraction: return "retraction";
    case SplitKind::section: return "section";
    case SplitKind::weak_inverse: return "weak_inverse";
  }
  return "?";
}

struct SplitWitness {
  SplitKind kind;
  GradedMorphism witness;
};

/// r with r o f = id_source, if one exists.
inline std::optional<SplitWitness> find_retraction(const GradedMorphism& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) {
    // r b = I  <=>  b^T r^T = I
    auto rt = solve_right(transpose(b), Matrix::identity(b.cols()));
    if (!rt) return std::nullopt;
    blocks.push_back(transpose(*rt));
  }
  return SplitWitness{SplitKind::retraction, GradedMorphism(f.target(), f.source(), std::move(blocks))};
}

/// s with f o s = id_target, if one exists.
inline std::optional<SplitWitness> find_section(const GradedMorphism& f) {
  std::vector<Matrix> blocks;
  for (const auto& b : f.blocks()) {
    auto s = solve_right(b, Matrix::identity(b.rows()));
    if (!s) return std::nullopt;
    blocks.push_back(std::move(*s));
  }
  return SplitWitness{SplitKind::section, GradedMorphism(f.target(), f.source(), std::move(blocks))};
}

/// The pieces of the regularity construction: f = phi o psi, a section of
/// psi and a retraction of phi. weak inverse = psi_section o phi_retraction.
struct RegularSplitting {
  ImageFactorization image;
  GradedMorphism psi_section;
  GradedMorphism phi_retraction;
};

inline RegularSplitting regular_splitting(const GradedMorphism& f) {
  ImageFactorization im = image_factorization(f);
  auto s = find_section(im.psi);
  auto r = find_retraction(im.phi);
  // psi is epi and phi mono by construction; semisimplicity makes both split.
  if (!s || !r) throw ConsistencyError("image factorization does not split");
  return {std::move(im), std::move(s->witness), std::move(r->witness)};
}

/// g with f o g o f = f. Always exists in this model.
inline SplitWitness weak_inverse(const GradedMorphism& f) {
  const RegularSplitting sp = regular_splitting(f);
  GradedMorphism g = compose(sp.psi_section, sp.phi_retraction);
  if (!(compose(f, g, f) == f)) throw ConsistencyError("weak inverse fails f g f = f");
  return {SplitKind::weak_inverse, std::move(g)};
}

inline bool is_split_mono(const GradedMorphism& f) { return find_retraction(f).has_value(); }
inline bool is_split_epi(const GradedMorphism& f) { return find_section(f).has_value(); }

/// Searches for a weak inverse by solving f g f = f directly; independent of
/// the image-factorization route used by weak_inverse.
inline bool is_regular(const GradedMorphism& f) {
  for (const auto& b : f.blocks()) {
    // b X b = b is linear in X; vec(b X b) = (b^T kron b) vec(X), column-major vec.
    const std::size_t rows = b.rows(), cols = b.cols();
    if (rows == 0 || cols == 0) continue;
    const Matrix system = kron(transpose(b), b);
    Matrix rhs(rows * cols, 1);
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) rhs(j * rows + i, 0) = b(i, j);
    if (!solve_right(system, rhs)) return false;
  }
  return true;
}

}  // namespace gcat
