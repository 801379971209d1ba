#include "closurelab/interiors.hpp"

#include "closurelab/expr.hpp"

namespace closurelab {

PairOp mbe_interior() {
  return PairOp("mbe", PairOp::Kind::Interior,
                [](const Submodule& a, const Submodule& b) { return m_times(colon_m(a, b)); });
}

PairOp identity_interior() {
  return PairOp("id", PairOp::Kind::Interior, [](const Submodule& a, const Submodule&) { return a; });
}

bool is_expansion(const PairOp& in, const Submodule& c, const Submodule& a, const Submodule& b) {
  return c.contains(a) && b.contains(c) && a.contains(in(c, b));
}

std::vector<CheckResult> check_interior_axioms(const PairOp& in, const std::vector<Instance>& instances, long bound) {
  CheckResult intensive{"intensive"}, idem{"idempotent"}, order{"order-preserving"},
      order_sub{"order-preserving on submodules"}, nak{"Nakayama"};
  for (const auto& [a, b] : instances) {
    Submodule ai = in(a, b);
    ++intensive.instances;
    if (!a.contains(ai)) intensive.fail(format_submodule(a));
    ++idem.instances;
    if (in(ai, b) != ai) idem.fail(format_submodule(a));
    for (const auto& c : submodule_interval(a, b, bound)) {
      Submodule ci = in(c, b);
      ++order.instances;
      if (!ci.contains(ai)) order.fail(format_submodule(a) + " <= " + format_submodule(c));
      ++order_sub.instances;
      if (!ci.contains(in(a, c))) order_sub.fail(format_submodule(a) + " <= " + format_submodule(c));
      if (a.contains(in(colon_m(a, c), b))) {
        ++nak.instances;
        if (ai != ci) nak.fail("A = " + format_submodule(a) + ", C = " + format_submodule(c));
      }
    }
  }
  return {intensive, idem, order, order_sub, nak};
}

}  // namespace closurelab
