// Small tour: build pair(2), look at two algebras, run a short audit.

#include <iostream>

#include "gcat/gcat.hpp"

int main() {
  using namespace gcat;
  const Category c = share(make_pair_groupoid(2));
  const GradedObject one = GradedObject::unit(c);
  std::cout << "unit: " << to_json(one).dump() << ", simple summands: " << decompose_simples(one).size() << "\n";

  // 1_0 is an algebra whose unit kills 1_1.
  const InternalAlgebra a0 = unit_summand_algebra(c, 0);
  const SeparabilityVerdict v0 = separability_verdict(a0);
  std::cout << "1_0: separable=" << v0.separable << " naturally_full=" << v0.naturally_full
            << " semiseparable=" << v0.semiseparable << " support=" << Json(support(a0)).dump() << "\n";

  // The groupoid algebra on both objects is the 2x2 matrix algebra.
  const InternalAlgebra m = groupoid_algebra(c, {0, 1});
  std::cout << "k[pair(2)]: valid=" << validate_algebra(m).valid() << " separable=" << separability_verdict(m).separable
            << "\n";

  // Its corner at J = {0} is 1_0 again.
  const CornerAlgebra corner = restrict_to_J(m, {0});
  std::cout << "corner at {0}: " << to_json(corner.in_subcategory.carrier).dump() << "\n";

  const BasedRingData gr = grothendieck_ring(c);
  const RingReport rr = check_ring(gr);
  std::cout << "Gr: rank " << gr.rank() << " based=" << rr.based << " fusion=" << rr.fusion << "\n";

  AuditOptions opt;
  opt.corpus = 2;
  opt.objects = 8;
  opt.morphisms = 8;
  std::cout << "\n" << render_table(run_audit(c, opt));
}
