#include "powsgp/pset.hpp"

#include <charconv>

#include "powsgp/errors.hpp"

namespace powsgp {

namespace {

BitVec bits_from_values(const std::vector<std::int64_t>& values) {
  BitVec bits;
  for (std::int64_t v : values) {
    if (v < 0) throw input_error("set elements must be non-negative: " + std::to_string(v));
    if (v > kDefaultMaxThreshold) {
      throw cap_error("set element exceeds the supported bound: " + std::to_string(v));
    }
    bits.set(static_cast<std::size_t>(v));
  }
  return bits;
}

}  // namespace

PSet PSet::from_bits(const Ground& ground, BitVec bits, std::optional<std::int64_t> tau,
                     std::int64_t max_threshold) {
  for (std::size_t p = bits.find_first(); p != BitVec::npos; p = bits.find_next(p)) {
    if (!ground->contains(static_cast<std::int64_t>(p))) {
      throw input_error("element not in the ground semigroup: " + std::to_string(p));
    }
  }
  if (!tau) {
    if (!bits.any()) throw input_error("a set element of P(H) must be non-empty");
    if (static_cast<std::int64_t>(bits.find_last()) > max_threshold) {
      throw cap_error("finite set exceeds the configured bound");
    }
    return PSet(ground, std::move(bits), std::nullopt);
  }

  if (*tau < 0) throw input_error("tail threshold must be non-negative");
  if (*tau > max_threshold) throw cap_error("tail threshold exceeds the configured bound");

  // Elements at or above the threshold are members of H and therefore
  // already denoted by the tail.
  bits.truncate(static_cast<std::size_t>(*tau));

  // Minimal threshold: step down while the element below is either not in H
  // or already in the set; in the latter case it moves from head to tail.
  std::int64_t t = *tau;
  while (t > 0) {
    std::int64_t below = t - 1;
    bool in_ground = ground->contains(below);
    bool in_set = bits.test(static_cast<std::size_t>(below));
    if (in_ground && !in_set) break;
    if (in_set) bits.reset(static_cast<std::size_t>(below));
    --t;
  }
  return PSet(ground, std::move(bits), t);
}

PSet PSet::finite(const Ground& ground, const std::vector<std::int64_t>& elems) {
  return from_bits(ground, bits_from_values(elems), std::nullopt);
}

PSet PSet::with_tail(const Ground& ground, const std::vector<std::int64_t>& head,
                     std::int64_t tau, std::int64_t max_threshold) {
  return from_bits(ground, bits_from_values(head), tau, max_threshold);
}

PSet PSet::singleton(const Ground& ground, std::int64_t x) { return finite(ground, {x}); }

PSet PSet::full(const Ground& ground) { return from_bits(ground, BitVec(), 0); }

PSet PSet::semiline(const Ground& ground, std::int64_t k) {
  if (k < 0) throw input_error("semiline threshold must be non-negative");
  return from_bits(ground, BitVec(), k);
}

std::string PSet::to_literal() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t p = head_.find_first(); p != BitVec::npos; p = head_.find_next(p)) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  if (tau_) {
    if (!first) out += ',';
    out += '~';
    out += std::to_string(*tau_);
  }
  out += '}';
  return out;
}

PSet PSet::parse_literal(const Ground& ground, std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t') compact += c;
  }
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}') {
    throw input_error("malformed set literal: " + std::string(text));
  }
  std::string_view body{compact};
  body = body.substr(1, body.size() - 2);

  std::vector<std::int64_t> head;
  std::optional<std::int64_t> tau;
  while (!body.empty()) {
    std::size_t comma = body.find(',');
    std::string_view tok = body.substr(0, comma);
    if (tok.empty()) throw input_error("empty entry in set literal");
    if (tau) throw input_error("'~' threshold must be the last entry of a set literal");
    bool is_tail = tok.front() == '~';
    if (is_tail) tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw input_error("bad set entry: " + std::string(tok));
    }
    if (is_tail) {
      tau = v;
    } else {
      head.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return from_bits(ground, bits_from_values(head), tau);
}

PSet difference(const PSet& x, const std::vector<std::int64_t>& removed) {
  if (!x.is_finite()) throw input_error("difference is only defined for finite sets");
  BitVec bits = x.head_bits();
  for (std::int64_t v : removed) {
    if (v < 0 || !bits.test(static_cast<std::size_t>(v))) {
      throw input_error("cannot remove absent element: " + std::to_string(v));
    }
    bits.reset(static_cast<std::size_t>(v));
  }
  if (!bits.any()) throw input_error("difference would leave the empty set");
  return PSet::from_bits(x.ground(), std::move(bits), std::nullopt);
}

}  // namespace powsgp
