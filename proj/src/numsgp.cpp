#include "powsgp/numsgp.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "powsgp/errors.hpp"

namespace powsgp {

namespace {

// Generators past this point would need a sieve too large for exact
// desk-scale work.
constexpr std::int64_t kMaxSieveBound = std::int64_t{1} << 24;

}  // namespace

NumericalSemigroup::Ptr NumericalSemigroup::build(std::vector<std::int64_t> generators,
                                                  bool includes_zero) {
  if (generators.empty()) {
    throw input_error("numerical semigroup needs at least one generator");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.front() < 1) {
    throw input_error("generators must be positive integers");
  }
  std::int64_t g = 0;
  for (std::int64_t v : generators) g = std::gcd(g, v);
  if (g != 1) {
    throw input_error("not cofinite: gcd of generators is " + std::to_string(g));
  }

  const std::int64_t lo = generators.front();
  const std::int64_t hi = generators.back();
  if (hi > kMaxSieveBound / (lo + 1)) {
    throw cap_error("generators exceed the supported sieve bound");
  }
  const std::int64_t bound = lo * hi + hi;

  // Additive closure of the generators on [0, bound].
  BitVec closed;
  closed.set(0);
  for (std::int64_t n = 1; n <= bound; ++n) {
    for (std::int64_t gen : generators) {
      if (gen > n) break;
      if (closed.test(static_cast<std::size_t>(n - gen))) {
        closed.set(static_cast<std::size_t>(n));
        break;
      }
    }
  }

  std::int64_t frob = -1;
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (!closed.test(static_cast<std::size_t>(n))) frob = n;
  }
  if (!includes_zero && frob < 0) frob = 0;

  auto s = std::shared_ptr<NumericalSemigroup>(new NumericalSemigroup());
  s->gens_ = std::move(generators);
  s->includes_zero_ = includes_zero;
  s->frobenius_ = frob;
  for (std::int64_t n = 0; n <= frob + 1; ++n) {
    bool member = n == 0 ? includes_zero : closed.test(static_cast<std::size_t>(n));
    if (member) s->sieve_.set(static_cast<std::size_t>(n));
  }
  return s;
}

const NumericalSemigroup::Ptr& NumericalSemigroup::naturals() {
  static const Ptr n = build({1}, true);
  return n;
}

std::vector<std::int64_t> NumericalSemigroup::gaps(bool complement_in_n) const {
  std::vector<std::int64_t> out;
  if (complement_in_n && !includes_zero_) out.push_back(0);
  for (std::int64_t n = 1; n <= frobenius_; ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

std::int64_t NumericalSemigroup::next_member(std::int64_t n) const {
  std::int64_t m = std::max<std::int64_t>(n, 0);
  while (!contains(m)) ++m;  // terminates by frobenius + 1 at the latest
  return m;
}

std::vector<std::int64_t> NumericalSemigroup::members_upto(std::int64_t n) const {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 0; v <= n; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::string NumericalSemigroup::to_text() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(gens_[i]);
  }
  out += includes_zero_ ? ";0>" : ";no0>";
  return out;
}

NumericalSemigroup::Ptr NumericalSemigroup::parse_text(std::string_view text) {
  if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
    throw input_error("malformed semigroup literal: " + std::string(text));
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t semi = body.rfind(';');
  if (semi == std::string_view::npos) {
    throw input_error("semigroup literal needs a ';0' or ';no0' suffix");
  }
  std::string_view variant = body.substr(semi + 1);
  bool includes_zero;
  if (variant == "0") {
    includes_zero = true;
  } else if (variant == "no0") {
    includes_zero = false;
  } else {
    throw input_error("unknown variant suffix: " + std::string(variant));
  }
  std::vector<std::int64_t> gens;
  std::string_view list = body.substr(0, semi);
  while (!list.empty()) {
    std::size_t comma = list.find(',');
    std::string_view tok = list.substr(0, comma);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw input_error("bad generator: " + std::string(tok));
    }
    gens.push_back(v);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return build(std::move(gens), includes_zero);
}

}  // namespace powsgp
