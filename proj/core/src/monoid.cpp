#include "factorlab/monoid.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace factorlab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NegativeElement: return "NegativeElement";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ValueMismatch: return "ValueMismatch";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Underdetermined: return "Underdetermined";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::CeilingExceeded: return "CeilingExceeded";
    case ErrorCode::EmptyDelta: return "EmptyDelta";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorCode::Overflow, "addition overflows int64");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorCode::Overflow, "multiplication overflows int64");
  return r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  return checked_mul(a / std::gcd(a, b), b);
}

Element AperySet::max() const {
  return *std::max_element(witnesses.begin(), witnesses.end());
}

namespace detail {

// Keep membership tables at desk scale; anything larger is out of scope.
constexpr Element kMaxTableSize = Element(1) << 30;

struct MonoidState {
  std::vector<Element> gens;
  std::vector<Element> dropped;
  Element frob = -1;
  std::vector<char> member;  // indexed 0 .. frob + gens.back() + 1

  mutable std::mutex apery_mutex;
  mutable std::map<Element, std::shared_ptr<const AperySet>> apery_cache;

  mutable std::mutex length_mutex;
  mutable std::vector<std::vector<Element>> length_table;

  bool contains(Element n) const {
    if (n < 0) return false;
    if (n > frob) return true;
    return member[static_cast<std::size_t>(n)] != 0;
  }
};

namespace {

// Least monoid element per residue class mod m, by relaxing one generator
// step at a time until a fixpoint. Shortest paths need at most m-1 steps.
std::vector<Element> apery_by_relaxation(const std::vector<Element>& gens, Element m) {
  const Element inf = std::numeric_limits<Element>::max() / 2;
  std::vector<Element> least(static_cast<std::size_t>(m), inf);
  least[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element r = 0; r < m; ++r) {
      if (least[static_cast<std::size_t>(r)] >= inf) continue;
      for (Element g : gens) {
        Element to = (r + g % m) % m;
        Element cand = least[static_cast<std::size_t>(r)] + g;
        if (cand < least[static_cast<std::size_t>(to)]) {
          least[static_cast<std::size_t>(to)] = cand;
          changed = true;
        }
      }
    }
  }
  return least;
}

std::vector<char> build_member_table(const std::vector<Element>& gens, Element bound) {
  std::vector<char> table(static_cast<std::size_t>(bound) + 1, 0);
  table[0] = 1;
  for (Element g : gens) {
    for (Element v = g; v <= bound; ++v) {
      if (table[static_cast<std::size_t>(v - g)]) table[static_cast<std::size_t>(v)] = 1;
    }
  }
  return table;
}

}  // namespace
}  // namespace detail

Monoid Monoid::from_generators(const std::vector<Element>& raw) {
  if (raw.empty()) raise(ErrorCode::EmptyInput, "generator list is empty");
  for (Element g : raw) {
    if (g < 1) {
      raise(ErrorCode::ZeroGenerator,
            "generator " + std::to_string(g) + " is not positive");
    }
  }

  std::vector<Element> sorted(raw);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Element g = 0;
  for (Element v : sorted) g = std::gcd(g, v);
  if (g != 1) {
    raise(ErrorCode::NonCoprime,
          "generators have common divisor " + std::to_string(g));
  }

  // Minimal generators are the members not expressible as a sum of two
  // nonzero members. Representations of values below a candidate never use
  // that candidate, so one sieve over the raw set settles every candidate.
  auto state = std::make_shared<detail::MonoidState>();
  const Element max_raw = sorted.back();
  std::vector<char> reach = detail::build_member_table(sorted, max_raw);
  for (Element cand : sorted) {
    bool redundant = false;
    for (Element s = 1; s < cand && !redundant; ++s) {
      if (reach[static_cast<std::size_t>(s)] && reach[static_cast<std::size_t>(cand - s)])
        redundant = true;
    }
    (redundant ? state->dropped : state->gens).push_back(cand);
  }

  const Element m = state->gens.front();
  std::vector<Element> apery = detail::apery_by_relaxation(state->gens, m);
  state->frob = *std::max_element(apery.begin(), apery.end()) - m;

  Element table_bound = std::max<Element>(state->frob, 0) + state->gens.back() + 1;
  if (table_bound >= detail::kMaxTableSize) {
    raise(ErrorCode::Overflow, "membership table would need " +
                                   std::to_string(table_bound) + " entries");
  }
  state->member = detail::build_member_table(state->gens, table_bound);

  {
    auto ap = std::make_shared<AperySet>();
    ap->base = m;
    ap->witnesses = std::move(apery);
    std::lock_guard<std::mutex> lock(state->apery_mutex);
    state->apery_cache.emplace(m, std::move(ap));
  }
  return Monoid(std::move(state));
}

Monoid::Monoid(std::shared_ptr<const detail::MonoidState> state)
    : state_(std::move(state)) {}

const std::vector<Element>& Monoid::generators() const { return state_->gens; }

const std::vector<Element>& Monoid::dropped_generators() const {
  return state_->dropped;
}

std::size_t Monoid::dimension() const { return state_->gens.size(); }

Element Monoid::smallest_generator() const { return state_->gens.front(); }

Element Monoid::largest_generator() const { return state_->gens.back(); }

Element Monoid::frobenius() const { return state_->frob; }

bool Monoid::contains(Element n) const { return state_->contains(n); }

AperySet Monoid::apery(Element base) const {
  if (base < 1 || !contains(base)) {
    raise(ErrorCode::NotAMember,
          "Apéry base " + std::to_string(base) + " is not a nonzero element");
  }
  {
    std::lock_guard<std::mutex> lock(state_->apery_mutex);
    auto it = state_->apery_cache.find(base);
    if (it != state_->apery_cache.end()) return *it->second;
  }
  // Least member per residue class; every class has one at most F + base.
  auto ap = std::make_shared<AperySet>();
  ap->base = base;
  ap->witnesses.reserve(static_cast<std::size_t>(base));
  for (Element r = 0; r < base; ++r) {
    Element v = r;
    while (!contains(v)) v += base;
    ap->witnesses.push_back(v);
  }
  AperySet result = *ap;
  std::lock_guard<std::mutex> lock(state_->apery_mutex);
  state_->apery_cache.emplace(base, std::move(ap));
  return result;
}

std::vector<Element> Monoid::gaps() const {
  std::vector<Element> out;
  for (Element n = 1; n <= state_->frob; ++n) {
    if (!state_->contains(n)) out.push_back(n);
  }
  return out;
}

std::vector<Element> Monoid::length_row(Element n) const {
  if (n < 0) raise(ErrorCode::NegativeElement, "length set of negative value");
  if (n >= detail::kMaxTableSize) {
    raise(ErrorCode::Overflow, "length table would need " + std::to_string(n) + " rows");
  }
  std::lock_guard<std::mutex> lock(state_->length_mutex);
  auto& table = state_->length_table;
  if (static_cast<std::size_t>(n) < table.size()) return table[static_cast<std::size_t>(n)];

  std::size_t old = table.size();
  table.resize(static_cast<std::size_t>(n) + 1);
  if (old == 0) {
    table[0] = {0};
    old = 1;
  }
  std::vector<Element> merged;
  for (std::size_t v = old; v < table.size(); ++v) {
    merged.clear();
    for (Element g : state_->gens) {
      if (static_cast<Element>(v) < g) break;
      const auto& prev = table[v - static_cast<std::size_t>(g)];
      for (Element len : prev) merged.push_back(len + 1);
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    table[v] = merged;
  }
  return table[static_cast<std::size_t>(n)];
}

bool operator==(const Monoid& a, const Monoid& b) {
  return a.state_ == b.state_ || a.state_->gens == b.state_->gens;
}

}  // namespace factorlab
