#pragma once

// Gr(C) with basis the simple objects X_g, and the Z+-ring / based-ring /
// fusion-ring predicates over arbitrary (possibly mutated) structure data.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcat/gvec.hpp"

namespace gcat {

struct BasedRingData {
  std::vector<std::string> basis_labels;
  std::vector<std::vector<std::vector<std::int64_t>>> c;  // b_i b_j = sum_k c[i][j][k] b_k
  std::vector<std::int64_t> unit_coeffs;
  std::vector<std::size_t> involution;

  std::size_t rank() const noexcept { return basis_labels.size(); }
};

/// Computes structure constants by tensoring simples and reading off
/// multiplicities, and the involution from left duals.
inline BasedRingData grothendieck_ring(const Category& cat) {
  const Groupoid& G = *cat;
  const std::size_t n = G.arrow_count();
  BasedRingData r;
  r.c.assign(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
  std::vector<GradedObject> simples;
  for (std::size_t g = 0; g < n; ++g) {
    r.basis_labels.push_back(G.label(g));
    simples.push_back(GradedObject::simple(cat, g));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const GradedObject t = tensor(simples[i], simples[j]);
      for (std::size_t k = 0; k < n; ++k) r.c[i][j][k] = static_cast<std::int64_t>(t.mult(k));
    }
  const GradedObject one = GradedObject::unit(cat);
  for (std::size_t k = 0; k < n; ++k) r.unit_coeffs.push_back(static_cast<std::int64_t>(one.mult(k)));
  for (std::size_t g = 0; g < n; ++g) {
    const auto d = decompose_simples(dual(simples[g]));
    if (d.size() != 1 || d.front().second != 1) throw ConsistencyError("dual of a simple is not simple");
    r.involution.push_back(d.front().first);
  }
  return r;
}

struct RingAxiomFailure {
  std::string axiom;
  std::vector<std::size_t> indices;  // offending basis indices, e.g. the (i, j, k) triple
};

struct RingReport {
  bool zplus = false;
  bool based = false;
  bool fusion = false;
  std::vector<RingAxiomFailure> failures;  // first failure per axiom, in check order
};

namespace detail {

inline std::vector<std::int64_t> ring_multiply(const BasedRingData& r, const std::vector<std::int64_t>& x,
                                               const std::vector<std::int64_t>& y) {
  const std::size_t n = r.rank();
  std::vector<std::int64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j]) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * r.c[i][j][k];
    }
  }
  return out;
}

inline std::vector<std::int64_t> basis_vector(std::size_t n, std::size_t i) {
  std::vector<std::int64_t> v(n, 0);
  v[i] = 1;
  return v;
}

inline bool well_shaped(const BasedRingData& r) {
  const std::size_t n = r.rank();
  if (r.c.size() != n || r.unit_coeffs.size() != n || r.involution.size() != n) return false;
  for (const auto& row : r.c) {
    if (row.size() != n) return false;
    for (const auto& col : row)
      if (col.size() != n) return false;
  }
  for (auto s : r.involution)
    if (s >= n) return false;
  return true;
}

}  // namespace detail

/// tau(x) = sum of the coefficients of x on basis elements occurring in 1.
inline std::int64_t tau(const BasedRingData& r, const std::vector<std::int64_t>& x) {
  std::int64_t t = 0;
  for (std::size_t k = 0; k < r.rank(); ++k)
    if (r.unit_coeffs[k] != 0) t += x[k];
  return t;
}

inline RingReport check_ring(const BasedRingData& r) {
  RingReport rep;
  if (!detail::well_shaped(r)) {
    rep.failures.push_back({"shape", {}});
    return rep;
  }
  const std::size_t n = r.rank();
  auto first = [&](const char* axiom, std::vector<std::size_t> idx) {
    for (const auto& f : rep.failures)
      if (f.axiom == axiom) return;
    rep.failures.push_back({axiom, std::move(idx)});
  };

  // Z+-ring: nonnegative constants, associativity, unit with nonnegative coefficients.
  bool zplus = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (r.c[i][j][k] < 0) {
          zplus = false;
          first("nonnegativity", {i, j, k});
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto bi = detail::basis_vector(n, i), bj = detail::basis_vector(n, j), bk = detail::basis_vector(n, k);
        if (detail::ring_multiply(r, detail::ring_multiply(r, bi, bj), bk) !=
            detail::ring_multiply(r, bi, detail::ring_multiply(r, bj, bk))) {
          zplus = false;
          first("associativity", {i, j, k});
        }
      }
  for (std::size_t k = 0; k < n; ++k)
    if (r.unit_coeffs[k] < 0) {
      zplus = false;
      first("unit nonnegativity", {k});
    }
  for (std::size_t i = 0; i < n; ++i) {
    const auto bi = detail::basis_vector(n, i);
    if (detail::ring_multiply(r, r.unit_coeffs, bi) != bi || detail::ring_multiply(r, bi, r.unit_coeffs) != bi) {
      zplus = false;
      first("unit law", {i});
    }
  }
  rep.zplus = zplus;

  // based: unit is a sum of distinct basis elements, * is an anti-involution, tau pairing.
  bool based = zplus;
  for (std::size_t k = 0; k < n; ++k)
    if (r.unit_coeffs[k] != 0 && r.unit_coeffs[k] != 1) {
      based = false;
      first("unit is a sum of distinct basis elements", {k});
    }
  for (std::size_t i = 0; i < n; ++i)
    if (r.involution[r.involution[i]] != i) {
      based = false;
      first("involution", {i});
    }
  if (based)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (r.c[i][j][k] != r.c[r.involution[j]][r.involution[i]][r.involution[k]]) {
            based = false;
            first("anti-involution", {i, j, k});
          }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = detail::ring_multiply(r, detail::basis_vector(n, i), detail::basis_vector(n, j));
      const std::int64_t expected = r.involution[j] == i ? 1 : 0;
      if (tau(r, prod) != expected) {
        based = false;
        first("tau pairing", {i, j});
      }
    }
  rep.based = based;

  std::size_t unit_terms = 0;
  for (auto u : r.unit_coeffs) unit_terms += u != 0;
  const bool unital_basis = unit_terms == 1;
  if (!unital_basis) first("unit is a basis element", {});
  rep.fusion = based && unital_basis && n > 0;
  return rep;
}

inline bool is_zplus_ring(const BasedRingData& r) { return check_ring(r).zplus; }
inline bool is_based_ring(const BasedRingData& r) { return check_ring(r).based; }
inline bool is_fusion_ring(const BasedRingData& r) { return check_ring(r).fusion; }

}  // namespace gcat
