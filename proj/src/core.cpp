// Implementation of the core value types (bitset solutions, solution sets,
// deterministic RNG helpers).
#include "sspforge/core.hpp"

#include <algorithm>
#include <bit>

namespace sspforge {

std::size_t Solution::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Solution::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

static void require_same_universe(const Solution& a, const Solution& b) {
  if (a.universe_size() != b.universe_size())
    throw SspError(ErrorCode::internal_error,
                   "solution universe size mismatch");
}

Solution Solution::intersect(const Solution& o) const {
  require_same_universe(*this, o);
  Solution r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

Solution Solution::unite(const Solution& o) const {
  require_same_universe(*this, o);
  Solution r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

Solution Solution::subtract(const Solution& o) const {
  require_same_universe(*this, o);
  Solution r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
  return r;
}

bool Solution::subset_of(const Solution& o) const {
  require_same_universe(*this, o);
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

std::vector<std::uint32_t> Solution::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (test(i)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

bool Solution::operator<(const Solution& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  std::size_t ca = count(), cb = o.count();
  if (ca != cb) return ca < cb;
  // Lexicographic by ascending element index: the solution whose first
  // differing element is present sorts first.
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i] == o.w_[i]) continue;
    std::uint64_t diff = w_[i] ^ o.w_[i];
    std::uint64_t low = diff & (~diff + 1);
    return (w_[i] & low) != 0;
  }
  return false;
}

bool SolutionSet::contains(const Solution& s) const {
  return std::binary_search(items.begin(), items.end(), s);
}

void SolutionSet::insert(Solution s) {
  auto it = std::lower_bound(items.begin(), items.end(), s);
  if (it != items.end() && *it == s) return;
  items.insert(it, std::move(s));
}

bool solution_equal_sets(const SolutionSet& a, const SolutionSet& b) {
  return a.items == b.items;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0)
    throw SspError(ErrorCode::internal_error, "rng bound must be positive");
  // Rejection sampling to avoid modulo bias; identical results everywhere.
  std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi)
    throw SspError(ErrorCode::internal_error, "rng range inverted");
  return lo + static_cast<std::int64_t>(
                  below(static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace sspforge
