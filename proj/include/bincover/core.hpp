#pragma once

#include <bincover/error.hpp>
#include <bincover/rational.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bincover {

/// An item size: an exact rational strictly between 0 and 1, kept in lowest
/// terms. Items of size 1 are excluded by the problem model.
class ItemSize {
public:
  explicit ItemSize(Rational value);
  ItemSize(long num, long den);

  const Rational& value() const noexcept { return value_; }
  double to_double() const { return value_.get_d(); }

  friend bool operator==(const ItemSize& a, const ItemSize& b) { return a.value_ == b.value_; }
  friend bool operator<(const ItemSize& a, const ItemSize& b) { return a.value_ < b.value_; }

private:
  Rational value_;
};

std::string to_string(const ItemSize& item);

/// An ordered input sequence. Order matters to online algorithms; the
/// multiset view is `sorted_items()`.
struct Sequence {
  std::vector<ItemSize> items;
  std::string provenance;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }

  std::vector<ItemSize> sorted_items() const;
};

Sequence make_sequence(std::span<const Rational> values, std::string provenance = {});

/// Convenience for tests and generators: {{1,2},{1,4}} -> <1/2, 1/4>.
Sequence make_sequence(std::initializer_list<std::pair<long, long>> fractions,
                       std::string provenance = {});

Sequence concat(const Sequence& a, const Sequence& b);

enum class BinStatus { Open, Closed };

struct Bin {
  std::vector<ItemSize> contents;
  BinStatus status = BinStatus::Open;

  Rational sum() const;
  bool covered() const { return sum() >= 1; }
};

struct Packing {
  std::vector<Bin> bins;

  /// Number of closed bins whose content reaches 1. Derived, never stored.
  std::size_t covered_count() const;
};

enum class TraceAction { Open, Place, Close };

std::string_view to_string(TraceAction action);

struct TraceEvent {
  std::size_t item = 0;  ///< index into the input; unused for Open/Close
  std::size_t bin = 0;
  TraceAction action = TraceAction::Place;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct PackingTrace {
  std::vector<TraceEvent> events;
  Packing final;

  std::size_t covered() const { return final.covered_count(); }
};

Rational volume(const Sequence& seq);
Rational volume(std::span<const ItemSize> items);

/// Recomputes each bin sum and returns the number of bins with sum >= 1.
/// Throws MultisetMismatch when the packing does not hold exactly seq's items.
std::size_t verify_packing(const Sequence& seq, const Packing& packing);

enum class Violation {
  None,
  NotClosedWhenCovered,  ///< (a) a covered bin was not closed by the next event
  ClosedUncovered,       ///< (b) a bin was closed with sum < 1
  TooManyOpen,           ///< (c) more than max_open bins stood open
};

std::string_view to_string(Violation v);

struct ReasonableVerdict {
  bool ok = true;
  Violation violation = Violation::None;
  std::size_t event_index = 0;  ///< first offending event
  std::string detail;
};

/// Checks the "reasonable algorithm" contract on a trace. Item sizes are read
/// from the final packing: the i-th place into bin b is final.bins[b].contents[i].
/// Throws MalformedTrace when event ordering is broken.
ReasonableVerdict validate_reasonable(const PackingTrace& trace, std::size_t max_open);

}  // namespace bincover
