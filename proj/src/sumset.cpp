#include "powsgp/sumset.hpp"

#include <algorithm>

#include "powsgp/errors.hpp"

namespace powsgp {

namespace {

void require_same_ground(const PSet& x, const PSet& y) {
  if (!x.same_ground(y)) throw input_error("operands live over different ground semigroups");
}

// Shift-OR convolution: OR of b shifted by every element of a.
BitVec convolve(const BitVec& a, const BitVec& b) {
  const BitVec& outer = a.count() <= b.count() ? a : b;
  const BitVec& inner = &outer == &a ? b : a;
  BitVec out;
  for (std::size_t p = outer.find_first(); p != BitVec::npos; p = outer.find_next(p)) {
    out.or_shifted(inner, p);
  }
  return out;
}

}  // namespace

BitVec dense_upto(const PSet& x, std::int64_t limit) {
  BitVec out;
  if (limit <= 0) return out;
  out = x.head_bits();
  out.truncate(static_cast<std::size_t>(limit));
  if (x.is_tail()) {
    const NumericalSemigroup& g = *x.ground();
    std::int64_t full_from = std::max(x.threshold(), g.frobenius() + 1);
    for (std::int64_t v = x.threshold(); v < std::min(full_from, limit); ++v) {
      if (g.contains(v)) out.set(static_cast<std::size_t>(v));
    }
    if (full_from < limit) {
      out.set_range(static_cast<std::size_t>(full_from), static_cast<std::size_t>(limit));
    }
  }
  return out;
}

PSet add(const PSet& x, const PSet& y, const SumOptions& opts) {
  require_same_ground(x, y);
  const PSet::Ground& ground = x.ground();

  if (x.is_finite() && y.is_finite()) {
    BitVec conv = convolve(x.head_bits(), y.head_bits());
    return PSet::from_bits(ground, std::move(conv), std::nullopt, opts.max_threshold);
  }

  // Safe tail threshold. With F the Frobenius number, every integer above F
  // is a member, so a tail operand contains every integer >= max(tau, F+1)
  // =: T. For two tails, any integer n >= T_x + T_y splits as T_x + (n -
  // T_x) with both parts in the operands; for finite X plus a tail, use
  // min X + T_y. Hence the sum contains every integer >= sigma, and below
  // sigma the convolution of the materialized parts is exact (a sum below
  // sigma only uses parts below sigma).
  const std::int64_t full = x.ground()->frobenius() + 1;
  std::int64_t sigma;
  if (x.is_tail() && y.is_tail()) {
    sigma = std::max(x.threshold(), full) + std::max(y.threshold(), full);
  } else {
    const PSet& fin = x.is_finite() ? x : y;
    const PSet& tail = x.is_finite() ? y : x;
    sigma = fin.min() + std::max(tail.threshold(), full);
  }
  if (sigma > opts.max_threshold) {
    throw cap_error("sumset tail threshold " + std::to_string(sigma) +
                    " exceeds the configured bound");
  }

  BitVec conv = convolve(dense_upto(x, sigma), dense_upto(y, sigma));
  conv.truncate(static_cast<std::size_t>(sigma));
  return PSet::from_bits(ground, std::move(conv), sigma, opts.max_threshold);
}

PSet power(const PSet& a, std::int64_t n, const SumOptions& opts) {
  if (n < 1) throw input_error("power exponent must be at least 1");
  PSet out = a;
  for (std::int64_t i = 1; i < n; ++i) out = add(out, a, opts);
  return out;
}

PSet translate(const PSet& x, std::int64_t offset, const PSet::Ground& target,
               const SumOptions& opts) {
  if (x.is_finite()) {
    BitVec out;
    for (std::size_t p = x.head_bits().find_first(); p != BitVec::npos;
         p = x.head_bits().find_next(p)) {
      std::int64_t v = static_cast<std::int64_t>(p) + offset;
      if (v < 0 || !target->contains(v)) {
        throw input_error("translated element leaves the target ground: " + std::to_string(v));
      }
      out.set(static_cast<std::size_t>(v));
    }
    return PSet::from_bits(target, std::move(out), std::nullopt, opts.max_threshold);
  }

  // Above sigma the translated set contains every integer: for n >= sigma,
  // n - offset is at least max(tau, F+1), hence a member of the source tail.
  // So the translate fits in the target exactly when the finitely many
  // elements below sigma do and the target has no gap at or above sigma.
  const std::int64_t sigma =
      std::max(x.threshold() + offset, x.ground()->frobenius() + 1 + offset);
  if (sigma > opts.max_threshold) {
    throw cap_error("translated tail threshold exceeds the configured bound");
  }
  if (sigma < 0) {
    throw input_error("translated element leaves the target ground: " + std::to_string(sigma));
  }
  if (sigma <= target->frobenius()) {
    std::int64_t gap = target->frobenius();  // a gap >= sigma always exists here
    throw input_error("translated element leaves the target ground: " + std::to_string(gap));
  }

  BitVec below = dense_upto(x, sigma - offset);
  BitVec out;
  for (std::size_t p = below.find_first(); p != BitVec::npos; p = below.find_next(p)) {
    std::int64_t v = static_cast<std::int64_t>(p) + offset;
    if (v < 0 || !target->contains(v)) {
      throw input_error("translated element leaves the target ground: " + std::to_string(v));
    }
    out.set(static_cast<std::size_t>(v));
  }
  return PSet::from_bits(target, std::move(out), sigma, opts.max_threshold);
}

BitVec truncate(const PSet& x, std::int64_t window) {
  if (window < 0) throw input_error("window must be non-negative");
  return dense_upto(x, window + 1);
}

}  // namespace powsgp
