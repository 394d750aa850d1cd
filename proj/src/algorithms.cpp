#include <bincover/algorithms.hpp>

#include <cmath>
#include <vector>

namespace bincover {

HarmonicConfig::HarmonicConfig(int k) : k_(k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
}

IntervalIndex harmonic_interval(const ItemSize& item, const HarmonicConfig& cfg) {
  // m = floor(1/x) puts x in (1/(m+1), 1/m]. A border 1/m belongs to [1/m, 1/(m-1)).
  const Rational inv = 1 / item.value();
  const BigInt m = floor(inv);
  const BigInt j = (inv == Rational(m)) ? m : BigInt(m + 1);
  if (j > cfg.k()) return {1};
  return {static_cast<int>(j.get_si())};
}

int harmonic_class(double item, int k) {
  if (k <= 1) return 1;
  // Smallest j with 1/j <= item; classes above k collapse into class 1.
  int j = static_cast<int>(std::floor(1.0 / item));
  if (j < 1) j = 1;
  while (j > 1 && item >= 1.0 / (j - 1)) --j;
  while (item < 1.0 / j) ++j;
  if (j < 2) j = 2;
  return j > k ? 1 : j;
}

namespace {

/// Shared engine: class 1 packs Next-Fit; class j >= 2 closes after j items.
PackingTrace harmonic_engine(const Sequence& seq, int k) {
  PackingTrace trace;
  auto& bins = trace.final.bins;
  std::vector<std::ptrdiff_t> open_bin(static_cast<std::size_t>(k) + 1, -1);
  std::vector<Rational> open_sum(static_cast<std::size_t>(k) + 1, Rational(0));
  const HarmonicConfig cfg(k);

  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    const ItemSize& item = seq.items[i];
    const int j = harmonic_interval(item, cfg).j;
    const auto slot = static_cast<std::size_t>(j);
    if (open_bin[slot] < 0) {
      open_bin[slot] = static_cast<std::ptrdiff_t>(bins.size());
      bins.emplace_back();
      trace.events.push_back({0, bins.size() - 1, TraceAction::Open});
    }
    const auto b = static_cast<std::size_t>(open_bin[slot]);
    bins[b].contents.push_back(item);
    open_sum[slot] += item.value();
    trace.events.push_back({i, b, TraceAction::Place});

    const bool full = (j == 1) ? open_sum[slot] >= 1
                               : bins[b].contents.size() == static_cast<std::size_t>(j);
    if (full) {
      bins[b].status = BinStatus::Closed;
      trace.events.push_back({0, b, TraceAction::Close});
      open_bin[slot] = -1;
      open_sum[slot] = 0;
    }
  }
  return trace;
}

}  // namespace

PackingTrace dnf_run(const Sequence& seq) { return harmonic_engine(seq, 1); }

PackingTrace dhk_run(const Sequence& seq, const HarmonicConfig& cfg) {
  return harmonic_engine(seq, cfg.k());
}

std::string AlgorithmId::name() const {
  return kind == Kind::DualNextFit ? "DNF" : "DH" + std::to_string(k);
}

AlgorithmId parse_algorithm(const std::string& name, int k) {
  if (name == "dnf" || name == "DNF") return AlgorithmId::dnf();
  if (name == "dhk" || name == "DHk") return AlgorithmId::dhk(k);
  if ((name.rfind("dh", 0) == 0 || name.rfind("DH", 0) == 0) && name.size() > 2) {
    try {
      std::size_t used = 0;
      const int parsed = std::stoi(name.substr(2), &used);
      if (used == name.size() - 2) return AlgorithmId::dhk(parsed);
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + name + "' (expected dnf, dhk or dh<k>)");
}

PackingTrace run(const AlgorithmId& alg, const Sequence& seq) {
  return alg.kind == AlgorithmId::Kind::DualNextFit ? dnf_run(seq) : dhk_run(seq, HarmonicConfig(alg.k));
}

}  // namespace bincover
