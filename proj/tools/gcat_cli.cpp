// gcat: audit a groupoid-graded category, drill into one algebra, print
// its Grothendieck ring, or print the traceability table.
//
// Exit codes: 0 ok, 2 input error (including an invalid algebra for
// check-algebra), 3 internal consistency violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gcat/audit.hpp"
#include "gcat/trace.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kConsistencyError = 3;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gcat::InputError("cannot write '" + path + "'");
  out << text;
}

int run_audit(const std::string& category_path, std::uint64_t seed, std::size_t corpus, const std::string& report_path) {
  const gcat::Category c = gcat::load_category(category_path);
  gcat::AuditOptions opt;
  opt.seed = seed;
  opt.corpus = corpus;
  const gcat::AuditReport rep = gcat::run_audit(c, opt);
  const std::string json = gcat::to_json(rep).dump(2) + "\n";
  if (report_path.empty()) {
    std::cerr << gcat::render_table(rep);
    std::cout << json;
  } else {
    write_file(report_path, json);
    std::cout << gcat::render_table(rep);
  }
  return rep.consistency ? 0 : kConsistencyError;
}

int run_check_algebra(const std::string& category_path, const std::string& algebra_path) {
  using gcat::Json;
  const gcat::Category c = gcat::load_category(category_path);
  const Json spec = gcat::read_json_file(algebra_path);
  const gcat::InternalAlgebra a = gcat::build_algebra(c, spec);
  const gcat::ValidationReport vr = gcat::validate_algebra(a);
  Json out = {{"algebra", spec}, {"validation", gcat::to_json(vr)}};
  if (!vr.valid() || vr.zero) {
    std::cout << out.dump(2) << "\n";
    return vr.valid() ? 0 : kInputError;
  }
  const auto J = gcat::support(a);
  const gcat::CornerAlgebra corner = gcat::restrict_to_J(a, J);
  const gcat::SeparabilityVerdict v = gcat::separability_verdict(a);
  const gcat::FaithfulVerdict fv = gcat::is_faithful_tensor(a);
  out["support"] = J;
  out["corner"] = {{"carrier", gcat::to_json(corner.in_subcategory.carrier)},
                   {"unit_mono", gcat::is_mono(corner.in_subcategory.unit)},
                   {"inclusion_is_algebra_morphism",
                    gcat::corner_equations_hold(a, corner) &&
                        gcat::is_algebra_morphism(corner.inclusion, corner.in_ambient, a)}};
  out["separable"] = v.separable;
  out["semiseparable"] = v.semiseparable;
  out["naturally_full"] = v.naturally_full;
  out["idempotent_trivial"] = v.idempotent_trivial;
  out["faithful"] = fv.faithful;
  out["restricted_separable"] = gcat::restricted_separability(a);
  if (v.witness) out["retraction"] = gcat::to_json(v.witness->witness);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_gr(const std::string& category_path) {
  const gcat::Category c = gcat::load_category(category_path);
  const gcat::BasedRingData d = gcat::grothendieck_ring(c);
  gcat::Json out = gcat::to_json(gcat::check_ring(d), d);
  gcat::AuditOptions opt;
  const auto corpus = gcat::algebra_corpus(c, opt.seed, opt.corpus);
  const bool agree = gcat::fusion_iff_separable_check(c, corpus);
  out["fusion_iff_separable"] = agree;
  std::cout << out.dump(2) << "\n";
  return agree ? 0 : kConsistencyError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks for groupoid-graded vector space categories"};
  app.require_subcommand(1);

  std::string category, report, algebra;
  std::uint64_t seed = 1;
  std::size_t corpus = 4;

  auto* audit = app.add_subcommand("audit", "Evaluate the fifteen conditions and the structural checks");
  audit->add_option("--category", category, "Category spec (JSON)")->required();
  audit->add_option("--seed", seed, "Seed for corpus and samples");
  audit->add_option("--corpus", corpus, "Number of random corpus algebras (>= 1)");
  audit->add_option("--report", report, "Write the JSON report here; the table goes to stdout");

  auto* check = app.add_subcommand("check-algebra", "Validate one algebra and report its verdicts");
  check->add_option("--category", category, "Category spec (JSON)")->required();
  check->add_option("--algebra", algebra, "Algebra spec (JSON)")->required();

  auto* gr = app.add_subcommand("gr", "Grothendieck ring report");
  gr->add_option("--category", category, "Category spec (JSON)")->required();

  auto* trace = app.add_subcommand("trace", "Print the statement-to-test table as markdown");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*audit) return run_audit(category, seed, corpus, report);
    if (*check) return run_check_algebra(category, algebra);
    if (*gr) return run_gr(category);
    if (*trace) {
      std::cout << gcat::render_trace_markdown();
      return 0;
    }
  } catch (const gcat::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const gcat::ValidationError& e) {
    std::cerr << "invalid spec:";
    for (const auto& issue : e.issues()) std::cerr << "\n  " << issue;
    std::cerr << "\n";
    return kInputError;
  } catch (const gcat::ConsistencyError& e) {
    std::cerr << "consistency violation: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const gcat::Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
