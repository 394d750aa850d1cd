#include <bincover/core.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

namespace bincover {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidItem: return "InvalidItem";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MultisetMismatch: return "MultisetMismatch";
    case ErrorCode::MalformedTrace: return "MalformedTrace";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::EpsTooLarge: return "EpsTooLarge";
    case ErrorCode::NotSubMultiset: return "NotSubMultiset";
    case ErrorCode::BadEps: return "BadEps";
    case ErrorCode::BadP: return "BadP";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ClaimMismatch: return "ClaimMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OutOfInterval: return "OutOfInterval";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NoBorder: return "NoBorder";
    case ErrorCode::BoundaryB: return "BoundaryB";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::MissingProvenance: return "MissingProvenance";
  }
  return "Unknown";
}

// --- rationals ------------------------------------------------------------------

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  auto fail = [&] { return Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(s.substr(0, slash));
    const std::string_view den = trim(s.substr(slash + 1));
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) throw fail();
    BigInt d{std::string(den), 10};
    if (d == 0) throw fail();
    Rational q{BigInt{std::string(num), 10}, d};
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  // Literal base-10 reading: [sign] digits [. digits] [e|E [sign] digits]
  std::string_view rest = s;
  bool negative = false;
  if (rest.front() == '-' || rest.front() == '+') {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view mantissa = rest;
  long exponent = 0;
  if (const auto epos = rest.find_first_of("eE"); epos != std::string_view::npos) {
    mantissa = rest.substr(0, epos);
    std::string_view exp_text = rest.substr(epos + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto* first = exp_text.data();
    const auto* last = exp_text.data() + exp_text.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || exp_text.empty()) throw fail();
    if (exponent > 4000 || exponent < -4000) throw fail();
  }
  std::string digits;
  long frac_digits = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = mantissa.substr(0, dot);
    const std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw fail();
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      throw fail();
    digits = std::string(int_part) + std::string(frac_part);
    frac_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) throw fail();
    digits = std::string(mantissa);
  }
  const long scale = exponent - frac_digits;
  Rational q{BigInt{digits, 10}};
  if (scale >= 0) {
    q *= pow10(static_cast<unsigned long>(scale));
  } else {
    q /= pow10(static_cast<unsigned long>(-scale));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string format_decimal(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::int64_t floor_to_int64(const Rational& q) {
  const BigInt f = floor(q);
  if (!f.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "value does not fit in 64 bits");
  return f.get_si();
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// --- items and sequences --------------------------------------------------------

ItemSize::ItemSize(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (!(value_ > 0 && value_ < 1))
    throw Error(ErrorCode::InvalidItem, "item size must lie in (0,1), got " + format_rational(value_));
}

ItemSize::ItemSize(long num, long den) : ItemSize(make_rational(num, den)) {}

std::string to_string(const ItemSize& item) { return format_rational(item.value()); }

std::vector<ItemSize> Sequence::sorted_items() const {
  std::vector<ItemSize> out = items;
  std::sort(out.begin(), out.end());
  return out;
}

Sequence make_sequence(std::span<const Rational> values, std::string provenance) {
  Sequence seq;
  seq.provenance = std::move(provenance);
  seq.items.reserve(values.size());
  for (const auto& v : values) seq.items.emplace_back(v);
  return seq;
}

Sequence make_sequence(std::initializer_list<std::pair<long, long>> fractions, std::string provenance) {
  Sequence seq;
  seq.provenance = std::move(provenance);
  for (const auto& [num, den] : fractions) seq.items.emplace_back(num, den);
  return seq;
}

Sequence concat(const Sequence& a, const Sequence& b) {
  Sequence out = a;
  out.items.insert(out.items.end(), b.items.begin(), b.items.end());
  return out;
}

Rational Bin::sum() const {
  Rational s = 0;
  for (const auto& item : contents) s += item.value();
  return s;
}

std::size_t Packing::covered_count() const {
  return static_cast<std::size_t>(std::count_if(bins.begin(), bins.end(), [](const Bin& b) {
    return b.status == BinStatus::Closed && b.covered();
  }));
}

std::string_view to_string(TraceAction action) {
  switch (action) {
    case TraceAction::Open: return "open";
    case TraceAction::Place: return "place";
    case TraceAction::Close: return "close";
  }
  return "?";
}

Rational volume(std::span<const ItemSize> items) {
  Rational total = 0;
  for (const auto& item : items) total += item.value();
  return total;
}

Rational volume(const Sequence& seq) { return volume(seq.items); }

std::size_t verify_packing(const Sequence& seq, const Packing& packing) {
  std::vector<ItemSize> packed;
  for (const auto& bin : packing.bins)
    packed.insert(packed.end(), bin.contents.begin(), bin.contents.end());
  std::sort(packed.begin(), packed.end());
  if (packed != seq.sorted_items())
    throw Error(ErrorCode::MultisetMismatch, "packing does not contain exactly the input items");
  std::size_t covered = 0;
  for (const auto& bin : packing.bins)
    if (bin.sum() >= 1) ++covered;
  return covered;
}

// --- reasonable-algorithm check ---------------------------------------------------

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::None: return "none";
    case Violation::NotClosedWhenCovered: return "covered bin not closed immediately";
    case Violation::ClosedUncovered: return "bin closed with sum < 1";
    case Violation::TooManyOpen: return "too many open bins";
  }
  return "?";
}

ReasonableVerdict validate_reasonable(const PackingTrace& trace, std::size_t max_open) {
  enum class State { Unopened, Open, Closed };
  const auto& bins = trace.final.bins;
  std::vector<State> state(bins.size(), State::Unopened);
  std::vector<std::size_t> placed(bins.size(), 0);
  std::vector<Rational> sums(bins.size(), Rational(0));
  std::map<std::size_t, std::size_t> item_seen;

  auto malformed = [](std::size_t idx, const std::string& why) {
    return Error(ErrorCode::MalformedTrace, "event " + std::to_string(idx) + ": " + why);
  };

  ReasonableVerdict verdict;
  auto flag = [&](Violation v, std::size_t idx, std::string detail) {
    if (verdict.ok) {
      verdict.ok = false;
      verdict.violation = v;
      verdict.event_index = idx;
      verdict.detail = std::move(detail);
    }
  };

  std::size_t open_now = 0;
  // A bin whose sum reached 1 on the previous event and must be closed next.
  std::optional<std::size_t> must_close;

  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto& ev = trace.events[i];
    if (ev.bin >= bins.size()) throw malformed(i, "unknown bin " + std::to_string(ev.bin));

    if (must_close && !(ev.action == TraceAction::Close && ev.bin == *must_close)) {
      flag(Violation::NotClosedWhenCovered, i, "bin " + std::to_string(*must_close) + " reached 1 but stayed open");
    }
    must_close.reset();

    switch (ev.action) {
      case TraceAction::Open:
        if (state[ev.bin] != State::Unopened) throw malformed(i, "bin opened twice");
        state[ev.bin] = State::Open;
        if (++open_now > max_open)
          flag(Violation::TooManyOpen, i, std::to_string(open_now) + " open bins > " + std::to_string(max_open));
        break;
      case TraceAction::Place: {
        if (state[ev.bin] != State::Open) throw malformed(i, "place into a bin that is not open");
        if (++item_seen[ev.item] > 1) throw malformed(i, "item placed twice");
        const auto& contents = bins[ev.bin].contents;
        if (placed[ev.bin] >= contents.size()) throw malformed(i, "more places than final contents");
        const bool was_covered = sums[ev.bin] >= 1;
        sums[ev.bin] += contents[placed[ev.bin]++].value();
        if (!was_covered && sums[ev.bin] >= 1) must_close = ev.bin;
        break;
      }
      case TraceAction::Close:
        if (state[ev.bin] != State::Open) throw malformed(i, "close of a bin that is not open");
        state[ev.bin] = State::Closed;
        --open_now;
        if (sums[ev.bin] < 1)
          flag(Violation::ClosedUncovered, i, "bin " + std::to_string(ev.bin) + " closed at " + format_rational(sums[ev.bin]));
        break;
    }
  }
  if (must_close)
    flag(Violation::NotClosedWhenCovered, trace.events.size(), "bin " + std::to_string(*must_close) + " left open after reaching 1");

  for (std::size_t b = 0; b < bins.size(); ++b) {
    if (placed[b] != bins[b].contents.size())
      throw Error(ErrorCode::MalformedTrace, "bin " + std::to_string(b) + " contents disagree with its place events");
    const bool closed = bins[b].status == BinStatus::Closed;
    if (closed != (state[b] == State::Closed))
      throw Error(ErrorCode::MalformedTrace, "bin " + std::to_string(b) + " status disagrees with its events");
  }
  // Item indices must be exactly 0..n-1.
  std::size_t expected = 0;
  for (const auto& [item, count] : item_seen) {
    if (item != expected++) throw Error(ErrorCode::MalformedTrace, "item indices are not contiguous");
  }
  return verdict;
}

}  // namespace bincover
