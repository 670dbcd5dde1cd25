#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcat/errors.hpp"

namespace gcat {

struct Arrow {
  std::size_t src;
  std::size_t tgt;
};

/// A finite groupoid. Composition is written diagrammatically:
/// compose(g1, g2) is "g1 then g2" and is defined iff tgt(g1) == src(g2).
/// Arrows carry a fixed global enumeration that every canonical ordering
/// downstream derives from.
class Groupoid {
 public:
  /// Builds and validates. Throws ValidationError listing every violated law.
  Groupoid(std::size_t object_count, std::vector<Arrow> arrows, std::vector<std::size_t> identity,
           std::vector<std::vector<std::optional<std::size_t>>> compose, std::vector<std::size_t> inverse,
           std::vector<std::string> labels = {})
      : objects_(object_count),
        arrows_(std::move(arrows)),
        identity_(std::move(identity)),
        compose_(std::move(compose)),
        inverse_(std::move(inverse)),
        labels_(std::move(labels)) {
    if (labels_.empty())
      for (std::size_t g = 0; g < arrows_.size(); ++g) labels_.push_back("m" + std::to_string(g));
    auto issues = check_shape();
    if (issues.empty()) issues = validate();
    if (!issues.empty()) throw ValidationError(std::move(issues));
    build_factorizations();
    fingerprint_ = compute_fingerprint();
  }

  std::size_t object_count() const noexcept { return objects_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  std::size_t src(std::size_t g) const { return arrows_.at(g).src; }
  std::size_t tgt(std::size_t g) const { return arrows_.at(g).tgt; }
  std::size_t identity(std::size_t object) const { return identity_.at(object); }
  std::size_t inverse(std::size_t g) const { return inverse_.at(g); }
  std::optional<std::size_t> compose(std::size_t g1, std::size_t g2) const { return compose_.at(g1).at(g2); }
  const std::string& label(std::size_t g) const { return labels_.at(g); }
  bool is_identity(std::size_t g) const { return identity_.at(src(g)) == g; }

  /// All (g1, g2) with compose(g1, g2) == k, lexicographic in (g1, g2).
  const std::vector<std::pair<std::size_t, std::size_t>>& factorizations(std::size_t k) const {
    return factorizations_.at(k);
  }

  /// Exhaustive check of identity, associativity, inverse and domain laws.
  std::vector<std::string> validate() const {
    std::vector<std::string> issues;
    const std::size_t n = arrows_.size();
    for (std::size_t g1 = 0; g1 < n; ++g1)
      for (std::size_t g2 = 0; g2 < n; ++g2) {
        const bool composable = tgt(g1) == src(g2);
        const auto& c = compose_[g1][g2];
        if (composable != c.has_value()) {
          issues.push_back("compose(" + label(g1) + "," + label(g2) + ") " +
                           (composable ? "undefined for composable pair" : "defined for non-composable pair"));
          continue;
        }
        if (c && (*c >= n || src(*c) != src(g1) || tgt(*c) != tgt(g2)))
          issues.push_back("compose(" + label(g1) + "," + label(g2) + ") has wrong endpoints");
      }
    if (!issues.empty()) return issues;

    for (std::size_t i = 0; i < objects_; ++i) {
      const std::size_t e = identity_[i];
      if (src(e) != i || tgt(e) != i) issues.push_back("identity of object " + std::to_string(i) + " is not a loop at it");
    }
    if (!issues.empty()) return issues;

    for (std::size_t g = 0; g < n; ++g) {
      if (*compose_[identity_[src(g)]][g] != g) issues.push_back("left identity fails for " + label(g));
      if (*compose_[g][identity_[tgt(g)]] != g) issues.push_back("right identity fails for " + label(g));
      const std::size_t h = inverse_[g];
      if (h >= n || src(h) != tgt(g) || tgt(h) != src(g)) {
        issues.push_back("inverse of " + label(g) + " has wrong endpoints");
        continue;
      }
      if (*compose_[g][h] != identity_[src(g)] || *compose_[h][g] != identity_[tgt(g)])
        issues.push_back("inverse law fails for " + label(g));
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!compose_[a][b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (!compose_[b][c]) continue;
          if (*compose_[*compose_[a][b]][c] != *compose_[a][*compose_[b][c]])
            issues.push_back("associativity fails for (" + label(a) + "," + label(b) + "," + label(c) + ")");
        }
      }
    return issues;
  }

  /// FNV-1a over the structure tables; stable across runs and platforms.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

 private:
  std::uint64_t compute_fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffU;
        h *= 1099511628211ULL;
      }
    };
    mix(objects_);
    mix(arrows_.size());
    for (const auto& a : arrows_) {
      mix(a.src);
      mix(a.tgt);
    }
    for (auto e : identity_) mix(e);
    for (const auto& row : compose_)
      for (const auto& c : row) mix(c ? *c + 1 : 0);
    for (auto v : inverse_) mix(v);
    return h;
  }

  std::vector<std::string> check_shape() const {
    std::vector<std::string> issues;
    const std::size_t n = arrows_.size();
    if (objects_ == 0) issues.push_back("groupoid has no objects");
    for (std::size_t g = 0; g < n; ++g)
      if (arrows_[g].src >= objects_ || arrows_[g].tgt >= objects_)
        issues.push_back("arrow " + std::to_string(g) + " has an endpoint out of range");
    if (identity_.size() != objects_) issues.push_back("identity table has wrong length");
    for (auto e : identity_)
      if (e >= n) issues.push_back("identity index out of range");
    if (inverse_.size() != n) issues.push_back("inverse table has wrong length");
    if (compose_.size() != n) issues.push_back("composition table has wrong number of rows");
    for (const auto& row : compose_)
      if (row.size() != n) issues.push_back("composition table row has wrong length");
    if (labels_.size() != n) issues.push_back("label list has wrong length");
    return issues;
  }

  void build_factorizations() {
    factorizations_.assign(arrows_.size(), {});
    for (std::size_t g1 = 0; g1 < arrows_.size(); ++g1)
      for (std::size_t g2 = 0; g2 < arrows_.size(); ++g2)
        if (auto k = compose_[g1][g2]) factorizations_[*k].emplace_back(g1, g2);
  }

  std::size_t objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> identity_;
  std::vector<std::vector<std::optional<std::size_t>>> compose_;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> factorizations_;
  std::uint64_t fingerprint_ = 0;
};

using Category = std::shared_ptr<const Groupoid>;

/// One-object groupoid from a Cayley table, table[a][b] = "a then b".
/// Element 0 must be the identity.
inline Groupoid make_group(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  std::vector<std::string> issues;
  if (n == 0) issues.push_back("empty Cayley table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) issues.push_back("row " + std::to_string(a) + " has wrong length");
    for (auto v : table[a])
      if (v >= n) issues.push_back("entry out of range in row " + std::to_string(a));
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a) issues.push_back("element 0 is not an identity for element " + std::to_string(a));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          issues.push_back("non-associative triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(c) + ")");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) inverse[a] = b;
    if (inverse[a] == n) issues.push_back("element " + std::to_string(a) + " has no inverse");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  std::vector<Arrow> arrows(n, Arrow{0, 0});
  std::vector<std::vector<std::optional<std::size_t>>> compose(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) compose[a][b] = table[a][b];
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back(a == 0 ? "e" : "g" + std::to_string(a));
  return Groupoid(1, std::move(arrows), {0}, std::move(compose), std::move(inverse), std::move(labels));
}

/// Pair groupoid on n objects: exactly one arrow i -> j per ordered pair,
/// enumerated as i*n + j.
inline Groupoid make_pair_groupoid(std::size_t n) {
  if (n == 0) throw ValidationError({"pair groupoid needs at least one object"});
  std::vector<Arrow> arrows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      arrows.push_back({i, j});
      labels.push_back("g" + std::to_string(i) + "_" + std::to_string(j));
    }
  std::vector<std::size_t> identity(n), inverse(n * n);
  for (std::size_t i = 0; i < n; ++i) identity[i] = i * n + i;
  std::vector<std::vector<std::optional<std::size_t>>> compose(n * n, std::vector<std::optional<std::size_t>>(n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inverse[i * n + j] = j * n + i;
      for (std::size_t k = 0; k < n; ++k) compose[i * n + j][j * n + k] = i * n + k;
    }
  return Groupoid(n, std::move(arrows), std::move(identity), std::move(compose), std::move(inverse), std::move(labels));
}

/// Objects and arrows of `a` first, then those of `b`; no cross composites.
inline Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
  const std::size_t na = a.arrow_count(), nb = b.arrow_count(), oa = a.object_count();
  std::vector<Arrow> arrows;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < na; ++g) {
    arrows.push_back({a.src(g), a.tgt(g)});
    labels.push_back("L." + a.label(g));
  }
  for (std::size_t g = 0; g < nb; ++g) {
    arrows.push_back({oa + b.src(g), oa + b.tgt(g)});
    labels.push_back("R." + b.label(g));
  }
  std::vector<std::size_t> identity, inverse;
  for (std::size_t i = 0; i < oa; ++i) identity.push_back(a.identity(i));
  for (std::size_t i = 0; i < b.object_count(); ++i) identity.push_back(na + b.identity(i));
  for (std::size_t g = 0; g < na; ++g) inverse.push_back(a.inverse(g));
  for (std::size_t g = 0; g < nb; ++g) inverse.push_back(na + b.inverse(g));
  std::vector<std::vector<std::optional<std::size_t>>> compose(na + nb, std::vector<std::optional<std::size_t>>(na + nb));
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < na; ++y) compose[x][y] = a.compose(x, y);
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      if (auto c = b.compose(x, y)) compose[na + x][na + y] = na + *c;
  return Groupoid(oa + b.object_count(), std::move(arrows), std::move(identity), std::move(compose),
                  std::move(inverse), std::move(labels));
}

inline Category share(Groupoid g) { return std::make_shared<const Groupoid>(std::move(g)); }

}  // namespace gcat
