#pragma once

// End-to-end audit of one category: corpus generation, the fifteen
// equivalent conditions with re-verifiable witnesses, the structural checks
// around corners A_J and the functors L_J, R_J, and the Grothendieck ring.

#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gcat/functors.hpp"
#include "gcat/grothendieck.hpp"
#include "gcat/io.hpp"
#include "gcat/random.hpp"

namespace gcat {

struct AuditOptions {
  std::uint64_t seed = 1;
  std::size_t corpus = 4;      // random algebras on top of the mandatory ones
  std::size_t objects = 32;    // sampled objects
  std::size_t morphisms = 64;  // sampled morphisms
};

struct CorpusAlgebra {
  Json description;
  InternalAlgebra algebra;
};

struct CorpusCoalgebra {
  Json description;
  InternalCoalgebra coalgebra;
};

/// unit_summand(i) for every object, the unit algebra and the full groupoid
/// algebra, followed by `extra` seeded random constructions.
inline std::vector<CorpusAlgebra> algebra_corpus(const Category& c, std::uint64_t seed, std::size_t extra) {
  if (extra == 0) throw InputError("corpus size must be at least 1");
  std::vector<Json> descs;
  for (std::size_t i = 0; i < c->object_count(); ++i) descs.push_back({{"gen", "unit_summand"}, {"i", i}});
  descs.push_back({{"gen", "unit"}});
  std::vector<std::size_t> all(c->object_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  descs.push_back({{"gen", "groupoid_algebra"}, {"J", all}});

  Sampler s(seed);
  auto small_part = [&]() -> Json {
    if (s.coin(1, 2)) return {{"gen", "unit_summand"}, {"i", s.index(c->object_count())}};
    return {{"gen", "groupoid_algebra"}, {"J", s.subset(c->object_count())}};
  };
  for (std::size_t k = 0; k < extra; ++k) {
    switch (s.index(3)) {
      case 0: descs.push_back({{"gen", "groupoid_algebra"}, {"J", s.subset(c->object_count())}}); break;
      case 1: descs.push_back({{"gen", "internal_end"}, {"x", to_json(s.object(c, 2))}}); break;
      default: descs.push_back({{"gen", "sum"}, {"parts", Json::array({small_part(), small_part()})}}); break;
    }
  }
  std::vector<CorpusAlgebra> out;
  for (auto& d : descs) {
    InternalAlgebra a = build_algebra(c, d);
    out.push_back({std::move(d), std::move(a)});
  }
  return out;
}

inline std::vector<CorpusCoalgebra> coalgebra_corpus(const std::vector<CorpusAlgebra>& algebras) {
  std::vector<CorpusCoalgebra> out;
  for (const auto& a : algebras) out.push_back({Json{{"dual_of", a.description}}, dualize_algebra(a.algebra)});
  return out;
}

/// is_fusion_ring(Gr(C)) <=> every corpus algebra gives a separable - (x) A.
inline bool fusion_iff_separable_check(const Category& c, const std::vector<CorpusAlgebra>& corpus) {
  bool all_separable = true;
  for (const auto& a : corpus) all_separable = all_separable && separability_verdict(a.algebra).separable;
  return is_fusion_ring(grothendieck_ring(c)) == all_separable;
}

// ---------------------------------------------------------------------------
// Conditions and witnesses

struct ConditionResult {
  int id = 0;
  bool holds = true;
  std::string method;  // "exact" or "sampled"
  Json witness;        // null when the condition holds
  std::string note;    // short human-readable witness description
};

inline bool condition_is_coalgebraic(int id) { return id >= 3 && id % 2 == 1; }

namespace detail {

inline bool nonzero(const GradedMorphism& f) { return !f.is_zero(); }

/// Invertible diagonal endomorphisms of 1 used to probe algebra morphisms 1 -> A.
inline std::vector<GradedMorphism> unit_automorphisms(const Category& c) {
  const GradedObject one = GradedObject::unit(c);
  std::vector<GradedMorphism> out{GradedMorphism::identity(one), scale(2, GradedMorphism::identity(one))};
  if (c->object_count() > 1)
    for (std::size_t i = 0; i < c->object_count(); ++i) {
      std::vector<Matrix> blocks = GradedMorphism::identity(one).blocks();
      blocks[c->identity(i)](0, 0) = 2;
      out.emplace_back(one, one, std::move(blocks));
    }
  return out;
}

}  // namespace detail

/// Re-derives the failure a witness claims. Unknown or malformed witnesses
/// are rejected.
inline bool reverify_witness(const Category& c, int id, const Json& w) {
  try {
    if (id == 1) {
      const auto parts = decompose_simples(GradedObject::unit(c));
      return w.at("unit_summands").get<std::size_t>() == parts.size() && parts.size() > 1;
    }
    const GradedMorphism f = parse_morphism(c, w.at("morphism"));
    if (!condition_is_coalgebraic(id)) {
      const InternalAlgebra a = build_algebra(c, w.at("algebra"));
      if (a.carrier.is_zero() || !validate_algebra(a).valid()) return false;
      switch (id) {
        case 2: return !find_retraction(a.unit) && detail::nonzero(f) && compose(a.unit, f).is_zero();
        case 4: return detail::nonzero(f) && induce_mor(f, a).is_zero();
        case 6: return !is_split_mono(f) && induced_split_mono_in_modules(f, a);
        case 8: return !is_split_epi(f) && induced_split_epi_in_modules(f, a);
        case 10: return !is_iso(f) && is_iso(induce_mor(f, a));
        case 12: return detail::nonzero(f) && compose(a.unit, f).is_zero();
        case 14: return is_algebra_morphism(f, unit_algebra(c), a) && detail::nonzero(f) && !is_mono(f);
        default: return false;
      }
    }
    const InternalCoalgebra k = build_coalgebra(c, w.at("coalgebra"));
    if (k.carrier.is_zero() || !validate_coalgebra(k).valid()) return false;
    switch (id) {
      case 3: return !find_section(k.counit) && detail::nonzero(f) && compose(f, k.counit).is_zero();
      case 5: return detail::nonzero(f) && induce_mor(f, k).is_zero();
      case 7: return !is_split_mono(f) && induced_split_mono_in_comodules(f, k);
      case 9: return !is_split_epi(f) && induced_split_epi_in_comodules(f, k);
      case 11: return !is_iso(f) && is_iso(induce_mor(f, k));
      case 13: return detail::nonzero(f) && compose(f, k.counit).is_zero();
      case 15: return is_coalgebra_morphism(f, k, unit_coalgebra(c)) && detail::nonzero(f) && !is_epi(f);
      default: return false;
    }
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Report

struct StructuralResult {
  bool ok = true;
  std::string detail;
};

struct AuditReport {
  std::uint64_t fingerprint = 0;
  std::size_t objects = 0;
  std::size_t arrows = 0;
  bool unit_simple = false;
  std::vector<ConditionResult> conditions;  // ids 1..15 in order
  std::map<std::string, StructuralResult> structural;
  RingReport ring;
  BasedRingData ring_data;
  std::vector<Json> algebras;
  std::vector<Json> coalgebras;
  AuditOptions options;
  bool consistency = false;

  bool structural_ok() const {
    for (const auto& [name, r] : structural)
      if (!r.ok) return false;
    return true;
  }
};

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

inline Json to_json(const RingReport& r, const BasedRingData& d) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"axiom", f.axiom}, {"indices", f.indices}});
  return {{"basis", d.basis_labels}, {"structure_constants", d.c}, {"unit", d.unit_coeffs},
          {"involution", d.involution}, {"zplus_ring", r.zplus}, {"based_ring", r.based},
          {"fusion_ring", r.fusion}, {"failures", failures}, {"rank", d.rank()}};
}

inline Json to_json(const AuditReport& r) {
  Json conditions = Json::object();
  for (const auto& c : r.conditions)
    conditions[std::to_string(c.id)] = {{"holds", c.holds}, {"method", c.method}, {"witness", c.witness}};
  Json structural = Json::object();
  for (const auto& [name, s] : r.structural) structural[name] = {{"ok", s.ok}, {"detail", s.detail}};
  return {{"category", {{"fingerprint", hex64(r.fingerprint)}, {"objects", r.objects}, {"arrows", r.arrows}}},
          {"unit_simple", r.unit_simple},
          {"conditions", conditions},
          {"structural", structural},
          {"structural_ok", r.structural_ok()},
          {"grothendieck", to_json(r.ring, r.ring_data)},
          {"corpus", {{"seed", r.options.seed}, {"extra", r.options.corpus}, {"algebras", r.algebras}, {"coalgebras", r.coalgebras}}},
          {"samples", {{"objects", r.options.objects}, {"morphisms", r.options.morphisms}}},
          {"consistency", r.consistency}};
}

inline std::string render_table(const AuditReport& r) {
  std::ostringstream os;
  os << "category " << hex64(r.fingerprint) << "  objects=" << r.objects << "  arrows=" << r.arrows << "\n";
  os << "unit simple: " << (r.unit_simple ? "yes" : "no") << "\n\n";
  os << "cond  holds  method   witness\n";
  for (const auto& c : r.conditions) {
    os << std::setw(4) << c.id << "  " << std::left << std::setw(5) << (c.holds ? "yes" : "no") << "  " << std::setw(7)
       << c.method << "  " << (c.note.empty() ? "-" : c.note) << std::right << "\n";
  }
  os << "\nstructural checks\n";
  for (const auto& [name, s] : r.structural)
    os << "  " << std::left << std::setw(40) << name << std::right << (s.ok ? "ok" : "FAILED: " + s.detail) << "\n";
  os << "\nGr(C): rank " << r.ring_data.rank() << ", Z+ " << (r.ring.zplus ? "yes" : "no") << ", based "
     << (r.ring.based ? "yes" : "no") << ", fusion " << (r.ring.fusion ? "yes" : "no") << "\n";
  os << "consistent: " << (r.consistency ? "yes" : "no") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Running the audit

namespace detail {

struct Samples {
  std::vector<GradedObject> objects;       // includes 1 and every simple
  std::vector<GradedMorphism> morphisms;   // random, sources and targets total <= 3
  std::vector<GradedMorphism> reflection;  // the part of `morphisms` used for module-level solves
};

inline Samples draw_samples(const Category& c, const AuditOptions& opt) {
  Samples s;
  Sampler rng(opt.seed * 0x9e3779b97f4a7c15ULL + 17);
  s.objects.push_back(GradedObject::unit(c));
  for (std::size_t g = 0; g < c->arrow_count(); ++g) s.objects.push_back(GradedObject::simple(c, g));
  while (s.objects.size() < opt.objects) s.objects.push_back(rng.object(c, 3));
  for (std::size_t k = 0; k < opt.morphisms; ++k) s.morphisms.push_back(rng.morphism(c, 3));
  for (std::size_t k = 0; k < s.morphisms.size() && k < 32; ++k) s.reflection.push_back(s.morphisms[k]);
  return s;
}

inline std::string describe(const Json& d) { return d.dump(); }

class Structural {
 public:
  explicit Structural(std::map<std::string, StructuralResult>& out) : out_(out) {}

  /// Runs `check`; a false result or a ConsistencyError marks `name` failed.
  void run(const std::string& name, const std::function<std::string()>& check) {
    std::string failure;
    try {
      failure = check();
    } catch (const ConsistencyError& e) {
      failure = e.what();
    }
    auto& slot = out_[name];
    if (!failure.empty() && slot.ok) slot = {false, failure};
  }

 private:
  std::map<std::string, StructuralResult>& out_;
};

}  // namespace detail

inline AuditReport run_audit(const Category& c, const AuditOptions& opt) {
  AuditReport rep;
  rep.options = opt;
  rep.fingerprint = c->fingerprint();
  rep.objects = c->object_count();
  rep.arrows = c->arrow_count();
  rep.unit_simple = c->object_count() == 1;

  const auto algebras = algebra_corpus(c, opt.seed, opt.corpus);
  const auto coalgebras = coalgebra_corpus(algebras);
  for (const auto& a : algebras) rep.algebras.push_back(a.description);
  for (const auto& k : coalgebras) rep.coalgebras.push_back(k.description);
  const detail::Samples samples = detail::draw_samples(c, opt);

  rep.conditions.resize(15);
  for (int id = 1; id <= 15; ++id) rep.conditions[id - 1] = {id, true, "exact", nullptr, ""};
  auto fail = [&](int id, const std::string& subject, const std::string& key, const Json& desc, const GradedMorphism& f,
                  const std::string& note) {
    ConditionResult& r = rep.conditions[id - 1];
    if (!r.holds) return;
    r.holds = false;
    r.witness = {{key, desc}, {"morphism", to_json(f)}};
    r.note = subject + ": " + note;
  };

  // (1)
  {
    const auto parts = decompose_simples(GradedObject::unit(c));
    if (!rep.unit_simple) {
      rep.conditions[0].holds = false;
      rep.conditions[0].witness = {{"unit_summands", parts.size()}};
      rep.conditions[0].note = "unit has " + std::to_string(parts.size()) + " simple summands";
    }
  }
  for (int id : {6, 7, 8, 9, 10, 11, 14, 15}) rep.conditions[id - 1].method = "sampled";

  const auto thetas = detail::unit_automorphisms(c);
  std::vector<SeparabilityVerdict> verdicts;
  for (const auto& entry : algebras) {
    const InternalAlgebra& a = entry.algebra;
    const std::string name = detail::describe(entry.description);
    const SeparabilityVerdict v = separability_verdict(a);
    verdicts.push_back(v);
    const Kernel ker = kernel(a.unit);
    if (!v.separable) fail(2, name, "algebra", entry.description, ker.inclusion, "u_A has a kernel");
    const FaithfulVerdict fv = is_faithful_tensor(a, samples.morphisms);
    if (!fv.faithful) fail(4, name, "algebra", entry.description, *fv.witness, "id_S (x) A = 0");
    const ReflectionVerdict rv = reflection_checks(a, samples.reflection);
    if (!rv.maschke) fail(6, name, "algebra", entry.description, *rv.maschke_witness, "S -> 0 becomes split-mono");
    if (!rv.dual_maschke) fail(8, name, "algebra", entry.description, *rv.dual_maschke_witness, "0 -> S becomes split-epi");
    if (!rv.conservative) fail(10, name, "algebra", entry.description, *rv.conservative_witness, "S -> 0 becomes iso");
    if (!is_mono(a.unit)) fail(12, name, "algebra", entry.description, ker.inclusion, "u_A has a kernel");
    const InternalAlgebra one = unit_algebra(c);
    for (const auto& theta : thetas) {
      const GradedMorphism f = compose(a.unit, theta);
      if (f.is_zero() || !is_algebra_morphism(f, one, a)) continue;
      if (!is_mono(f)) fail(14, name, "algebra", entry.description, f, "algebra morphism 1 -> A with a kernel");
    }
  }
  for (const auto& entry : coalgebras) {
    const InternalCoalgebra& k = entry.coalgebra;
    const std::string name = detail::describe(entry.description);
    const SeparabilityVerdict v = coseparability_verdict(k);
    const Cokernel cok = cokernel(k.counit);
    if (!v.separable) fail(3, name, "coalgebra", entry.description, cok.projection, "eps_C has a cokernel");
    const FaithfulVerdict fv = is_faithful_cotensor(k, samples.morphisms);
    if (!fv.faithful) fail(5, name, "coalgebra", entry.description, *fv.witness, "id_S (x) C = 0");
    const ReflectionVerdict rv = coreflection_checks(k, samples.reflection);
    if (!rv.maschke) fail(7, name, "coalgebra", entry.description, *rv.maschke_witness, "S -> 0 becomes split-mono");
    if (!rv.dual_maschke) fail(9, name, "coalgebra", entry.description, *rv.dual_maschke_witness, "0 -> S becomes split-epi");
    if (!rv.conservative) fail(11, name, "coalgebra", entry.description, *rv.conservative_witness, "S -> 0 becomes iso");
    if (!is_epi(k.counit)) fail(13, name, "coalgebra", entry.description, cok.projection, "eps_C has a cokernel");
    const InternalCoalgebra one = unit_coalgebra(c);
    for (const auto& theta : thetas) {
      const GradedMorphism f = compose(theta, k.counit);
      if (f.is_zero() || !is_coalgebra_morphism(f, k, one)) continue;
      if (!is_epi(f)) fail(15, name, "coalgebra", entry.description, f, "coalgebra morphism C -> 1 with a cokernel");
    }
  }

  // Structural checks.
  detail::Structural st(rep.structural);
  st.run("unit_summands_are_algebras", [&]() -> std::string {
    for (std::size_t i = 0; i < c->object_count(); ++i)
      if (!validate_algebra(unit_summand_algebra(c, i)).valid() || !validate_coalgebra(unit_summand_coalgebra(c, i)).valid())
        return "1_" + std::to_string(i) + " fails an axiom";
    return "";
  });
  st.run("constructors_validate", [&]() -> std::string {
    for (const auto& a : algebras)
      if (!validate_algebra(a.algebra).valid()) return detail::describe(a.description);
    for (const auto& k : coalgebras)
      if (!validate_coalgebra(k.coalgebra).valid()) return detail::describe(k.description);
    return "";
  });
  st.run("unit_simple_crosscheck", [&]() -> std::string {
    return (decompose_simples(GradedObject::unit(c)).size() == 1) == rep.unit_simple ? "" : "simple count disagrees";
  });
  for (std::size_t n = 0; n < algebras.size(); ++n) {
    const InternalAlgebra& a = algebras[n].algebra;
    const std::string name = detail::describe(algebras[n].description);
    const SeparabilityVerdict& v = verdicts[n];
    st.run("support_theorem", [&]() -> std::string {
      support(a);
      support(coalgebras[n].coalgebra);
      return "";
    });
    st.run("corner_unit_mono", [&]() -> std::string {
      const CornerAlgebra corner = restrict_to_J(a, support(a));
      return is_mono(corner.in_subcategory.unit) ? "" : name;
    });
    st.run("corner_inclusion_is_algebra_morphism", [&]() -> std::string {
      const CornerAlgebra corner = restrict_to_J(a, support(a));
      return corner_equations_hold(a, corner) && is_algebra_morphism(corner.inclusion, corner.in_ambient, a) ? "" : name;
    });
    st.run("restricted_separability", [&]() -> std::string {
      return restricted_separability(a) && restricted_coseparability(coalgebras[n].coalgebra) ? "" : name;
    });
    st.run("semiseparable_everywhere", [&]() -> std::string {
      return v.semiseparable && coseparability_verdict(coalgebras[n].coalgebra).semiseparable ? "" : name;
    });
    st.run("verdict_invariants", [&]() -> std::string {
      const bool ok = (!v.separable || v.semiseparable) && (!v.naturally_full || v.semiseparable) &&
                      v.separable == (v.semiseparable && v.idempotent_trivial);
      return ok ? "" : name;
    });
    st.run("idempotent_law", [&]() -> std::string {
      bool all_identity = true;
      for (const auto& m : samples.objects) {
        const GradedMorphism e = idempotent_e(a, m);
        if (!(compose(e, e) == e)) return name + ": e_M not idempotent";
        if (!(e == idempotent_via_unit(a, m))) return name + ": e_M differs from nu_M eta_M";
        all_identity = all_identity && e.is_identity();
      }
      for (const auto& f : samples.morphisms)
        if (!(compose(idempotent_e(a, f.target()), f) == compose(f, idempotent_e(a, f.source()))))
          return name + ": e not natural";
      return all_identity == v.separable ? "" : name + ": e = id disagrees with separability";
    });
    st.run("section_identity_matches_verdict", [&]() -> std::string {
      const GradedMorphism r = v.separable ? v.witness->witness : weak_inverse(a.unit).witness;
      std::vector<GradedMorphism> probes;
      for (const auto& m : samples.objects) probes.push_back(GradedMorphism::identity(m));
      probes.insert(probes.end(), samples.morphisms.begin(), samples.morphisms.end());
      return check_section_identity(a, r, probes).passed == v.separable ? "" : name;
    });
  }

  {
    Sampler rng(opt.seed * 0x2545f4914f6cdd1dULL + 3);
    std::vector<std::vector<std::size_t>> subsets;
    for (const auto& a : algebras) subsets.push_back(support(a.algebra));
    subsets.push_back(rng.subset(c->object_count()));
    subsets.push_back(rng.subset(c->object_count()));
    std::sort(subsets.begin(), subsets.end());
    subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
    const std::size_t per_subset = std::max<std::size_t>(2, opt.objects / 8);
    for (const auto& J : subsets) {
      const MonoidalFunctorData L = inclusion_LJ(c, J);
      const MonoidalFunctorData R = projection_RJ(c, J);
      for (std::size_t t = 0; t < per_subset; ++t) {
        const GradedObject x = rng.object_in(c, J, 2), y = rng.object_in(c, J, 2), z = rng.object_in(c, J, 2);
        st.run("lj_separable_frobenius", [&]() -> std::string {
          auto f = check_lax(L, x, y, z);
          for (auto& e : check_colax(L, x, y, z)) f.push_back(e);
          for (auto& e : check_frobenius(L, x, y, z)) f.push_back(e);
          for (auto& e : check_separable(L, x, y)) f.push_back(e);
          return f.empty() ? "" : f.front().axiom;
        });
        const GradedObject p = rng.object(c, 2), q = rng.object(c, 2), w = rng.object(c, 2);
        st.run("rj_lax_colax", [&]() -> std::string {
          auto f = check_lax(R, p, q, w);
          for (auto& e : check_colax(R, p, q, w)) f.push_back(e);
          return f.empty() ? "" : f.front().axiom;
        });
        st.run("frobenius_pair", [&]() -> std::string {
          const GradedObject b2 = rng.object_in(c, J, 2);
          const GradedMorphism h = rng.morphism(b2, x);
          const GradedMorphism k = rng.morphism(p, q);
          const FrobeniusPairCheck fp = frobenius_pair_check(J, x, p, h, k);
          return fp.passed ? "" : fp.failures.front();
        });
      }
    }
  }

  rep.ring_data = grothendieck_ring(c);
  rep.ring = check_ring(rep.ring_data);
  st.run("fusion_iff_separable", [&]() -> std::string {
    return fusion_iff_separable_check(c, algebras) ? "" : "Gr(C) fusion verdict disagrees with the corpus";
  });
  st.run("fusion_iff_one_object", [&]() -> std::string {
    return rep.ring.fusion == rep.unit_simple ? "" : "Gr(C) fusion verdict disagrees with the object count";
  });
  st.run("witnesses_reverify", [&]() -> std::string {
    for (const auto& cond : rep.conditions)
      if (!cond.holds && !reverify_witness(c, cond.id, cond.witness)) return "condition " + std::to_string(cond.id);
    return "";
  });

  bool agree = true;
  for (const auto& cond : rep.conditions) agree = agree && cond.holds == rep.unit_simple;
  rep.consistency = agree && rep.structural_ok();
  return rep;
}

}  // namespace gcat
