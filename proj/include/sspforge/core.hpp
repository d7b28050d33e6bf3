// Core value types shared across the library: dynamic bitmask solutions,
// solution sets, enumeration budgets, deterministic RNG, and the error
// hierarchy that the CLI maps onto exit codes.
#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sspforge {

// ---------------------------------------------------------------------------
// Errors

enum class ErrorCode {
  parse_error,        // malformed document / unknown field / bad reference
  invalid_instance,   // structurally valid JSON but violates problem schema
  kind_mismatch,      // reduction or composition applied to wrong problem kind
  unsupported_shape,  // instance outside the domain a transformer supports
  no_embedding,       // reduction defines no universe embedding
  generation_failed,  // instance generator exhausted its retry budget
  budget_exceeded,    // enumeration node budget exhausted
  claims_mismatch,    // observed properties differ from registered claims
  internal_error,
};

class SspError : public std::runtime_error {
 public:
  SspError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// ---------------------------------------------------------------------------
// Enumeration budget.  All exhaustive searches count recursion nodes against a
// shared budget so that runaway instances fail deterministically instead of
// hanging.  The CLI default (50'000'000 nodes) can be overridden with the
// SSPFORGE_BUDGET environment variable or a command line flag.

constexpr std::uint64_t kDefaultBudget = 50'000'000;

class Budget {
 public:
  explicit Budget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_)
      throw SspError(ErrorCode::budget_exceeded,
                     "enumeration budget exhausted (" +
                         std::to_string(limit_) + " nodes)");
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// ---------------------------------------------------------------------------
// Solution: a subset of a problem universe, stored as a fixed-width bitset.
// The width is the universe size of the instance the solution belongs to;
// element i of the canonical universe corresponds to bit i.

class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t universe_size)
      : n_(universe_size), w_((universe_size + 63) / 64, 0) {}

  static Solution from_indices(std::size_t universe_size,
                               const std::vector<std::uint32_t>& indices) {
    Solution s(universe_size);
    for (auto i : indices) s.set(i);
    return s;
  }

  std::size_t universe_size() const { return n_; }

  void set(std::size_t i, bool value = true) {
    check(i);
    if (value)
      w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(std::size_t i) const {
    check(i);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const;
  bool empty() const;

  // Set algebra; operands must share a universe size.
  Solution intersect(const Solution& o) const;
  Solution unite(const Solution& o) const;
  Solution subtract(const Solution& o) const;
  bool subset_of(const Solution& o) const;

  std::vector<std::uint32_t> indices() const;

  bool operator==(const Solution& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Solution& o) const { return !(*this == o); }
  // Total order used for canonical solution-set ordering: by population count
  // first (small solutions first), then lexicographically by element index.
  bool operator<(const Solution& o) const;

 private:
  void check(std::size_t i) const {
    if (i >= n_)
      throw SspError(ErrorCode::internal_error,
                     "solution index out of range");
  }
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// A canonically ordered set of solutions plus a completeness marker.  The
// marker is false when an enumerator stopped early (budget or caller-imposed
// cap), in which case the contents are a valid but possibly partial sample.
struct SolutionSet {
  std::vector<Solution> items;
  bool complete = true;

  std::size_t size() const { return items.size(); }
  bool contains(const Solution& s) const;
  void insert(Solution s);  // keeps canonical order, drops duplicates
};

bool solution_equal_sets(const SolutionSet& a, const SolutionSet& b);

// ---------------------------------------------------------------------------
// Deterministic RNG.  Instance generation must be reproducible across
// platforms; std::uniform_int_distribution is implementation-defined, so we
// use splitmix64 with explicit rejection sampling instead.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Uniform value in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  std::uint64_t state_;
};

}  // namespace sspforge
