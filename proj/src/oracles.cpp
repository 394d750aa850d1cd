#include <bincover/kernels.hpp>
#include <bincover/oracles.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace bincover {

namespace {

std::size_t to_count(std::int64_t v) { return static_cast<std::size_t>(v); }
std::size_t to_count(const BigInt& v) { return static_cast<std::size_t>(v.get_ui()); }

template <class T>
class OptSearch {
public:
  OptSearch(std::vector<T> sizes, T unit, std::uint64_t budget)
      : a_(std::move(sizes)), unit_(std::move(unit)), used_(a_.size(), false), budget_(budget) {
    std::sort(a_.begin(), a_.end(), std::greater<>());
    for (const auto& x : a_) free_ += x;
  }

  std::size_t solve() {
    best_ = greedy();
    search(0);
    return best_;
  }

private:
  // Largest item plus smallest items until covered; a feasible packing.
  std::size_t greedy() const {
    std::size_t lo = 0;
    std::size_t hi = a_.size();
    std::size_t covered = 0;
    while (lo < hi) {
      T sum = a_[lo++];
      while (sum < unit_ && lo < hi) sum += a_[--hi];
      if (sum >= unit_) ++covered;
    }
    return covered;
  }

  void tick() {
    if (++nodes_ > budget_)
      throw Error(ErrorCode::InstanceTooLarge, "opt_exact exceeded its node budget of " + std::to_string(budget_));
  }

  void mark(std::size_t i) { used_[i] = true; free_ -= a_[i]; }
  void unmark(std::size_t i) { used_[i] = false; free_ += a_[i]; }

  void search(std::size_t covered) {
    tick();
    std::size_t i = 0;
    while (i < a_.size() && used_[i]) ++i;
    if (i == a_.size()) {
      best_ = std::max(best_, covered);
      return;
    }
    if (covered + to_count(T(free_ / unit_)) <= best_) return;

    // The largest remaining item starts the next group ...
    mark(i);
    grow(covered, a_[i], i);
    unmark(i);
    // ... or is never used.
    mark(i);
    search(covered);
    unmark(i);
  }

  void grow(std::size_t covered, const T& sum, std::size_t last) {
    tick();
    if (covered + to_count(T((sum + free_) / unit_)) <= best_) return;
    const T need = unit_ - sum;

    // Complete with the smallest item that reaches 1; any larger completing
    // item can be exchanged with it.
    std::size_t completion = a_.size();
    for (std::size_t j = last + 1; j < a_.size(); ++j) {
      if (!used_[j] && a_[j] >= need) completion = j;
      if (a_[j] < need) break;
    }
    if (completion < a_.size()) {
      mark(completion);
      search(covered + 1);
      unmark(completion);
    }

    // Or grow by an item that keeps the group below 1. Equal sizes are
    // interchangeable, so each distinct size is tried once per slot.
    const T* tried = nullptr;
    for (std::size_t j = last + 1; j < a_.size(); ++j) {
      if (used_[j] || !(a_[j] < need)) continue;
      if (tried != nullptr && *tried == a_[j]) continue;
      tried = &a_[j];
      mark(j);
      grow(covered, sum + a_[j], j);
      unmark(j);
    }
  }

  std::vector<T> a_;
  T unit_;
  std::vector<bool> used_;
  T free_{};
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  std::uint64_t budget_;
};

}  // namespace

std::size_t opt_exact(const Sequence& multiset, const OptExactOptions& options) {
  if (multiset.empty()) return 0;
  if (auto scaled = scale_to_integers(multiset.items)) {
    OptSearch<std::int64_t> search(std::move(scaled->first), scaled->second, options.node_budget);
    return search.solve();
  }
  BigInt unit = 1;
  for (const auto& item : multiset.items)
    mpz_lcm(unit.get_mpz_t(), unit.get_mpz_t(), item.value().get_den_mpz_t());
  std::vector<BigInt> sizes;
  for (const auto& item : multiset.items)
    sizes.push_back(item.value().get_num() * (unit / item.value().get_den()));
  OptSearch<BigInt> search(std::move(sizes), unit, options.node_budget);
  return search.solve();
}

std::size_t opt_two_size(std::size_t large_count, std::size_t small_count, const Rational& eps) {
  const std::size_t n = large_count + small_count;
  const bool ok = eps > 0 && (n == 0 ? eps < 1 : eps * static_cast<unsigned long>(n) < 1);
  if (!ok) throw Error(ErrorCode::EpsTooLarge, "need 0 < eps < 1/(l+s), got " + format_rational(eps));
  // Each large pairs with one small (sum exactly 1); surplus larges pair up;
  // surplus smalls total less than 1.
  if (small_count <= large_count) return n / 2;
  return large_count;
}

std::size_t verify_certificate(const Sequence& seq, const PartitionCertificate& cert) {
  std::map<Rational, std::size_t> available;
  for (const auto& item : seq.items) ++available[item.value()];
  std::size_t covered = 0;
  for (const auto& group : cert.groups) {
    Rational sum = 0;
    for (const auto& item : group) {
      auto it = available.find(item.value());
      if (it == available.end() || it->second == 0)
        throw Error(ErrorCode::NotSubMultiset, "certificate uses " + to_string(item) + " more often than the sequence holds it");
      --it->second;
      sum += item.value();
    }
    if (sum >= 1) ++covered;
  }
  return covered;
}

std::size_t opt_volume_bound(const Sequence& seq) {
  return static_cast<std::size_t>(floor(volume(seq)).get_ui());
}

}  // namespace bincover
