#include "powsgp/quotient.hpp"

#include <algorithm>

#include "powsgp/errors.hpp"
#include "powsgp/sumset.hpp"

namespace powsgp {

PSet normalize(const PSet& x) {
  return translate(x, -x.min(), NumericalSemigroup::naturals());
}

bool conjugate_related(const PSet& x, const PSet& y) {
  if (!x.same_ground(y)) throw input_error("operands live over different ground semigroups");
  return normalize(x) == normalize(y);
}

PSet lift(const PSet& a, const PSet::Ground& target, std::int64_t k) {
  if (!a.member(0)) throw precondition_error("class representative must contain 0");
  if (!a.ground()->same_set(*NumericalSemigroup::naturals())) {
    throw input_error("class representative must live over N");
  }
  if (k <= target->frobenius()) {
    throw input_error("lift offset must exceed the Frobenius number " +
                      std::to_string(target->frobenius()));
  }
  return translate(a, k, target);
}

std::optional<std::pair<std::int64_t, std::int64_t>> conjugacy_witness(const PSet& x,
                                                                       const PSet& y) {
  if (!x.same_ground(y)) throw input_error("operands live over different ground semigroups");
  if (!x.is_finite() || !y.is_finite()) {
    throw input_error("witness search is only implemented for finite sets");
  }
  const PSet::Ground& ground = x.ground();
  const std::int64_t max_elem =
      std::max(static_cast<std::int64_t>(x.head_bits().find_last()),
               static_cast<std::int64_t>(y.head_bits().find_last()));
  const std::int64_t bound = ground->frobenius() + max_elem + 1;
  const std::vector<std::int64_t> shifts = ground->members_upto(bound);
  for (std::int64_t u : shifts) {
    PSet xu = translate(x, u, ground);
    for (std::int64_t v : shifts) {
      if (xu == translate(y, v, ground)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

}  // namespace powsgp
