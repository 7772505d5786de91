#include "powsgp/autosearch.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>

#include "powsgp/errors.hpp"

namespace powsgp {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  return (h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2))) * 0x100000001b3ULL;
}

}  // namespace

TruncatedPowerMonoid TruncatedPowerMonoid::build(PSet::Ground ground, std::int64_t window,
                                                 Variant variant, const BuildOptions& opts) {
  if (window < 0) throw input_error("window must be non-negative");
  if (variant == Variant::P0 && !ground->includes_zero()) {
    throw input_error("the P0 variant needs a monoid ground (0 in H)");
  }

  TruncatedPowerMonoid m;
  m.ground_ = std::move(ground);
  m.window_ = window;
  m.variant_ = variant;
  m.members_ = m.ground_->members_upto(window);
  if (m.members_.empty()) throw input_error("window contains no members of the ground");

  const std::size_t k = m.members_.size();
  if (k > 24) throw cap_error("window holds too many members for mask-based elements");
  const std::size_t count =
      variant == Variant::P0 ? (std::size_t{1} << (k - 1)) : (std::size_t{1} << k);
  if (count > opts.element_cap) {
    throw cap_error("element count " + std::to_string(count) + " exceeds cap " +
                    std::to_string(opts.element_cap));
  }
  m.count_ = count;

  m.position_.assign(static_cast<std::size_t>(window) + 1, -1);
  for (std::size_t i = 0; i < k; ++i) {
    m.position_[static_cast<std::size_t>(m.members_[i])] = static_cast<std::int32_t>(i);
  }
  if (m.ground_->includes_zero()) m.identity_ = m.index_of_mask(1u);

  if (count <= 1024) {
    m.table_.resize(count * count);
    for (std::uint32_t i = 0; i < count; ++i) {
      for (std::uint32_t j = 0; j <= i; ++j) {
        std::uint32_t r = m.index_of_mask(m.mask_op(m.mask_of(i), m.mask_of(j)));
        m.table_[i * count + j] = r;
        m.table_[j * count + i] = r;  // sumsets commute
      }
    }
  }
  return m;
}

std::uint32_t TruncatedPowerMonoid::mask_of(std::uint32_t index) const {
  return variant_ == Variant::P0 ? (index << 1) | 1u : index;
}

std::uint32_t TruncatedPowerMonoid::index_of_mask(std::uint32_t mask) const {
  return variant_ == Variant::P0 ? mask >> 1 : mask;
}

std::uint32_t TruncatedPowerMonoid::mask_op(std::uint32_t ma, std::uint32_t mb) const {
  if (ma == 0 || mb == 0) return 0;  // the overflow class absorbs
  std::uint32_t out = 0;
  for (std::uint32_t a = ma; a != 0; a &= a - 1) {
    const std::int64_t va = members_[static_cast<std::size_t>(std::countr_zero(a))];
    for (std::uint32_t b = mb; b != 0; b &= b - 1) {
      const std::int64_t sum = va + members_[static_cast<std::size_t>(std::countr_zero(b))];
      if (sum <= window_) {
        // a sum of members is a member, so it has a position
        out |= std::uint32_t{1} << position_[static_cast<std::size_t>(sum)];
      }
    }
  }
  return out;
}

std::uint32_t TruncatedPowerMonoid::op(std::uint32_t i, std::uint32_t j) const {
  if (!table_.empty()) return table_[i * count_ + j];
  return index_of_mask(mask_op(mask_of(i), mask_of(j)));
}

std::vector<std::int64_t> TruncatedPowerMonoid::element_values(std::uint32_t index) const {
  std::vector<std::int64_t> out;
  for (std::uint32_t m = mask_of(index); m != 0; m &= m - 1) {
    out.push_back(members_[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return out;
}

std::uint32_t TruncatedPowerMonoid::index_of(const std::vector<std::int64_t>& values) const {
  std::uint32_t mask = 0;
  for (std::int64_t v : values) {
    if (v < 0 || v > window_ || position_[static_cast<std::size_t>(v)] < 0) {
      throw input_error("not a member of the window: " + std::to_string(v));
    }
    mask |= std::uint32_t{1} << position_[static_cast<std::size_t>(v)];
  }
  if (variant_ == Variant::P0 && (mask & 1u) == 0) {
    throw input_error("P0 elements must contain 0");
  }
  return index_of_mask(mask);
}

bool TruncatedPowerMonoid::element_contains(std::uint32_t index, std::int64_t value) const {
  if (value < 0 || value > window_) return false;
  std::int32_t pos = position_[static_cast<std::size_t>(value)];
  return pos >= 0 && ((mask_of(index) >> pos) & 1u) != 0;
}

std::size_t TruncatedPowerMonoid::element_size(std::uint32_t index) const {
  return static_cast<std::size_t>(std::popcount(mask_of(index)));
}

std::optional<std::int64_t> TruncatedPowerMonoid::element_min(std::uint32_t index) const {
  std::uint32_t mask = mask_of(index);
  if (mask == 0) return std::nullopt;
  return members_[static_cast<std::size_t>(std::countr_zero(mask))];
}

std::string TruncatedPowerMonoid::element_to_string(std::uint32_t index) const {
  std::string out = "{";
  bool first = true;
  for (std::int64_t v : element_values(index)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

// Partition refinement over the multiplication structure: elements start in
// classes keyed by cheap invariants (idempotency, size, minimum) and get
// split by the sorted multiset of (class of y, class of x ⊕ y) until the
// partition stabilizes. Any automorphism maps a class into itself, so image
// candidates are restricted to class mates.
std::vector<std::uint64_t> refined_classes(const TruncatedPowerMonoid& m) {
  const std::size_t n = m.size();
  std::vector<std::uint64_t> cls(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint64_t h = hash_mix(0, m.is_idempotent_element(x) ? 1 : 2);
    h = hash_mix(h, static_cast<std::uint64_t>(m.element_size(x)));
    auto mn = m.element_min(x);
    h = hash_mix(h, mn ? static_cast<std::uint64_t>(*mn + 1) : 0);
    cls[x] = h;
  }
  if (n > 2048) return cls;  // the quadratic rounds stop paying off past this

  auto distinct = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
  };

  std::size_t classes = distinct(cls);
  for (int round = 0; round < 8 && classes < n; ++round) {
    std::vector<std::uint64_t> next(n);
    std::vector<std::uint64_t> sig(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        sig[y] = hash_mix(cls[y], cls[m.op(x, y)]);
      }
      std::sort(sig.begin(), sig.end());
      std::uint64_t h = cls[x];
      for (std::uint64_t s : sig) h = hash_mix(h, s);
      next[x] = h;
    }
    std::size_t now = distinct(next);
    cls.swap(next);
    if (now == classes) break;
    classes = now;
  }
  return cls;
}

struct AutomorphismSearcher {
  const TruncatedPowerMonoid& m;
  const std::vector<std::uint64_t>& cls;
  std::vector<std::vector<std::uint32_t>>& results;
  std::size_t n;
  std::vector<std::uint32_t> f, finv;
  std::vector<std::uint32_t> assigned;  // assignment order; doubles as undo trail
  std::vector<std::uint32_t> order;
  std::chrono::steady_clock::time_point deadline;
  bool use_deadline = false;
  bool aborted = false;
  std::uint64_t nodes = 0;

  AutomorphismSearcher(const TruncatedPowerMonoid& monoid,
                       const std::vector<std::uint64_t>& classes,
                       std::vector<std::vector<std::uint32_t>>& out)
      : m(monoid), cls(classes), results(out), n(monoid.size()) {
    f.assign(n, kUnset);
    finv.assign(n, kUnset);
    std::map<std::uint64_t, std::uint32_t> class_size;
    for (std::uint32_t x = 0; x < n; ++x) ++class_size[cls[x]];
    order.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) order[x] = x;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (class_size[cls[a]] != class_size[cls[b]]) {
        return class_size[cls[a]] < class_size[cls[b]];
      }
      return a < b;
    });
  }

  bool force(std::uint32_t x, std::uint32_t y) {
    if (f[x] != kUnset) return f[x] == y;
    if (finv[y] != kUnset || cls[x] != cls[y]) return false;
    f[x] = y;
    finv[y] = x;
    assigned.push_back(x);
    return true;
  }

  void rollback(std::size_t mark) {
    while (assigned.size() > mark) {
      std::uint32_t x = assigned.back();
      assigned.pop_back();
      finv[f[x]] = kUnset;
      f[x] = kUnset;
    }
  }

  // Assign f(x0) = y0 and close under products with everything assigned;
  // forced images are pushed and processed in turn. Rolls back on failure.
  bool extend(std::uint32_t x0, std::uint32_t y0) {
    std::size_t mark = assigned.size();
    if (!force(x0, y0)) {
      rollback(mark);
      return false;
    }
    for (std::size_t i = mark; i < assigned.size(); ++i) {
      std::uint32_t a = assigned[i];
      for (std::size_t j = 0; j < assigned.size(); ++j) {
        std::uint32_t b = assigned[j];
        if (!force(m.op(a, b), m.op(f[a], f[b]))) {
          rollback(mark);
          return false;
        }
      }
    }
    return true;
  }

  void search(std::size_t oi) {
    if (aborted) return;
    ++nodes;
    if (use_deadline && std::chrono::steady_clock::now() > deadline) {
      aborted = true;
      return;
    }
    while (oi < order.size() && f[order[oi]] != kUnset) ++oi;
    if (oi == order.size()) {
      std::vector<std::uint32_t> perm(f.begin(), f.end());
      if (is_homomorphism(m, perm)) results.push_back(std::move(perm));
      return;
    }
    std::uint32_t x = order[oi];
    for (std::uint32_t y = 0; y < n; ++y) {
      if (cls[y] != cls[x] || finv[y] != kUnset) continue;
      std::size_t mark = assigned.size();
      if (extend(x, y)) search(oi + 1);
      rollback(mark);
      if (aborted) return;
    }
  }
};

}  // namespace

AutomorphismSearchResult find_automorphisms(const TruncatedPowerMonoid& m,
                                            const SearchOptions& opts) {
  AutomorphismSearchResult result;
  std::vector<std::uint64_t> cls = refined_classes(m);
  AutomorphismSearcher searcher(m, cls, result.automorphisms);
  if (opts.timeout_seconds > 0) {
    searcher.use_deadline = true;
    searcher.deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(opts.timeout_seconds));
  }
  searcher.search(0);
  result.complete = !searcher.aborted;
  std::sort(result.automorphisms.begin(), result.automorphisms.end());
  return result;
}

bool is_homomorphism(const TruncatedPowerMonoid& m, const std::vector<std::uint32_t>& f) {
  const std::size_t n = m.size();
  if (f.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::uint32_t v : f) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return !homomorphism_failure(m, f).has_value();
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> homomorphism_failure(
    const TruncatedPowerMonoid& m, const std::vector<std::uint32_t>& f) {
  const std::size_t n = m.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (f[m.op(i, j)] != m.op(f[i], f[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

ProofPipelineReport proof_pipeline(const TruncatedPowerMonoid& m,
                                   const std::vector<std::uint32_t>& f) {
  const std::size_t n = m.size();
  {
    std::vector<char> seen(n, 0);
    bool ok = f.size() == n;
    for (std::uint32_t v : f) {
      if (!ok || v >= n || seen[v]) {
        ok = false;
        break;
      }
      seen[v] = 1;
    }
    if (!ok) throw precondition_error("candidate map is not a bijection of the elements");
  }

  ProofPipelineReport report;
  const bool monoid_ground = m.ground()->includes_zero();

  {
    PipelineStep st;
    st.name = "homomorphism";
    st.checked = n * n;
    auto fail = homomorphism_failure(m, f);
    st.passed = !fail.has_value();
    if (fail) {
      st.witness = "at (" + m.element_to_string(fail->first) + ", " +
                   m.element_to_string(fail->second) + ")";
    }
    report.steps.push_back(std::move(st));
  }

  {
    PipelineStep st;
    st.name = "doubletons-fixed";
    st.passed = true;
    if (monoid_ground) {
      for (std::int64_t x : m.member_values()) {
        if (x == 0) continue;
        std::uint32_t idx = m.index_of({0, x});
        ++st.checked;
        if (f[idx] != idx) {
          st.passed = false;
          st.witness = m.element_to_string(idx) + " moved to " + m.element_to_string(f[idx]);
          break;
        }
      }
    }
    report.steps.push_back(std::move(st));
  }

  {
    PipelineStep st;
    st.name = "idempotents-fixed";
    st.passed = true;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (!m.is_idempotent_element(e)) continue;
      ++st.checked;
      if (f[e] != e) {
        st.passed = false;
        st.witness = m.element_to_string(e) + " moved to " + m.element_to_string(f[e]);
        break;
      }
    }
    report.steps.push_back(std::move(st));
  }

  {
    // In-window halo test: with T(H_y) = {0} ∪ {members >= y} and its
    // pierced companion, T(H_y) ⊕ X = T(H_y^*) ⊕ X holds exactly when
    // y ∈ X, for every X containing 0. Both directions are window-safe:
    // the sides can only differ at y itself, and y <= window.
    PipelineStep st;
    st.name = "halo-membership";
    st.passed = true;
    if (monoid_ground) {
      for (std::int64_t y : m.member_values()) {
        if (y == 0 || !st.passed) continue;
        std::vector<std::int64_t> halo_values{0};
        for (std::int64_t v : m.member_values()) {
          if (v >= y) halo_values.push_back(v);
        }
        std::uint32_t halo = m.index_of(halo_values);
        halo_values.erase(std::find(halo_values.begin(), halo_values.end(), y));
        std::uint32_t pierced = m.index_of(halo_values);
        for (std::uint32_t x = 0; x < n; ++x) {
          if (!m.element_contains(x, 0)) continue;
          bool equal = m.op(halo, f[x]) == m.op(pierced, f[x]);
          bool mem = m.element_contains(x, y);
          ++st.checked;
          if (equal != mem) {
            st.passed = false;
            st.witness = "y=" + std::to_string(y) + ", X=" + m.element_to_string(x);
            break;
          }
        }
      }
    }
    report.steps.push_back(std::move(st));
  }

  {
    PipelineStep st;
    st.name = "min-preserved";
    st.passed = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      auto mn = m.element_min(x);
      if (!mn) continue;
      ++st.checked;
      if (m.element_min(f[x]) != mn) {
        st.passed = false;
        st.witness = m.element_to_string(x) + " moved to " + m.element_to_string(f[x]);
        break;
      }
    }
    report.steps.push_back(std::move(st));
  }

  {
    // Class pairs under X ~ Y iff X - min X = Y - min Y; the induced map on
    // classes is well-defined when f keeps related elements related.
    PipelineStep st;
    st.name = "quotient-well-defined";
    st.passed = true;
    auto norm_key = [&](std::uint32_t idx) {
      std::vector<std::int64_t> values = m.element_values(idx);
      if (!values.empty()) {
        std::int64_t lo = values.front();
        for (std::int64_t& v : values) v -= lo;
      }
      return values;
    };
    std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> classes;
    for (std::uint32_t x = 0; x < n; ++x) classes[norm_key(x)].push_back(x);
    for (const auto& [key, elems] : classes) {
      if (!st.passed) break;
      for (std::size_t i = 1; i < elems.size(); ++i) {
        ++st.checked;
        if (norm_key(f[elems[0]]) != norm_key(f[elems[i]])) {
          st.passed = false;
          st.witness = "(" + m.element_to_string(elems[0]) + ", " +
                       m.element_to_string(elems[i]) + ")";
          break;
        }
      }
    }
    report.steps.push_back(std::move(st));
  }

  return report;
}

std::vector<std::uint32_t> find_cancellative(const TruncatedPowerMonoid& m) {
  const std::size_t n = m.size();
  std::vector<std::uint32_t> out;
  std::vector<char> seen(n);
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t x = 0; x < n && ok; ++x) {
      std::uint32_t r = m.op(e, x);
      if (seen[r]) ok = false;
      seen[r] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::uint32_t x = 0; x < n && ok; ++x) {
      std::uint32_t r = m.op(x, e);
      if (seen[r]) ok = false;
      seen[r] = 1;
    }
    if (ok) out.push_back(e);
  }
  return out;
}

}  // namespace powsgp
