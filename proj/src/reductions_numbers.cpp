// Reductions among the numeric kinds: subset-sum pinned as a degenerate
// knapsack, the two-padding-number partition construction, and partition as a
// two-machine scheduling deadline.
#include <numeric>

#include "reductions_impl.hpp"

namespace sspforge {
namespace red {

namespace {

BigInt total_of(const std::vector<BigInt>& v) {
  BigInt t = 0;
  for (const auto& x : v) t += x;
  return t;
}

Solution identity_lift(const Applied& ap, const Solution& s) {
  Solution out(universe_size(ap.target));
  for (std::size_t i = 0; i < s.universe_size(); ++i)
    if (s.test(i)) out.set(ap.embed[i]);
  return out;
}

}  // namespace

// ss -> ks: price = weight = the number, floor = cap = the target, so
// feasible subsets are exactly the subsets summing to the target.
Applied ss_to_ks_apply(const Instance& src) {
  const auto& d = std::get<SsData>(src.data);
  KsData out;
  out.prices = d.numbers;
  out.weights = d.numbers;
  out.min_price = d.target;
  out.max_weight = d.target;
  Applied ap;
  ap.target.kind = ProblemId::ks;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.numbers.size());
  return ap;
}

Solution ss_to_ks_lift(const Instance& /*src*/, const Applied& ap,
                       const Solution& s) {
  return identity_lift(ap, s);
}

// ss -> p: append M+1 and (total+1-M).  A half-sum subset containing the
// last number cannot also take M+1, and its source part must sum to M.
Applied ss_to_p_apply(const Instance& src) {
  const auto& d = std::get<SsData>(src.data);
  BigInt total = total_of(d.numbers);
  if (d.target > total)
    fail_shape("padding construction needs target <= sum of numbers");
  PartData out;
  out.numbers = d.numbers;
  out.numbers.push_back(d.target + 1);
  out.numbers.push_back(total + 1 - d.target);
  Applied ap;
  ap.target.kind = ProblemId::p;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.numbers.size());
  return ap;
}

Solution ss_to_p_lift(const Instance& /*src*/, const Applied& ap,
                      const Solution& s) {
  Solution out = identity_lift(ap, s);
  out.set(universe_size(ap.target) - 1);
  return out;
}

// p -> tms: same numbers as jobs with deadline floor(total/2); both loads
// meet the deadline exactly when the chosen side sums to half the total.
Applied p_to_tms_apply(const Instance& src) {
  const auto& d = std::get<PartData>(src.data);
  TmsData out;
  out.jobs = d.numbers;
  out.bound = total_of(d.numbers) / 2;
  Applied ap;
  ap.target.kind = ProblemId::tms;
  ap.target.data = std::move(out);
  ap.has_embedding = true;
  ap.embed = identity_embed(d.numbers.size());
  return ap;
}

Solution p_to_tms_lift(const Instance& /*src*/, const Applied& ap,
                       const Solution& s) {
  return identity_lift(ap, s);
}

}  // namespace red
}  // namespace sspforge
