#include <bincover/generators.hpp>
#include <bincover/kernels.hpp>
#include <bincover/rng.hpp>

#include <map>

namespace bincover {

std::string_view to_string(BorderCase c) {
  switch (c) {
    case BorderCase::None: return "none";
    case BorderCase::One: return "one-border";
    case BorderCase::Two: return "two-border";
    case BorderCase::Many: return "many-border";
  }
  return "?";
}

std::string_view to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "lower-bound"; }

IntervalSpec::IntervalSpec(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (!(a_ >= 0 && a_ < b_ && b_ <= 1))
    throw Error(ErrorCode::InvalidArgument, "interval needs 0 <= a < b <= 1, got (" + format_rational(a_) + ", " + format_rational(b_) + ")");
  // Smallest l with 1/l < b.
  p_ = static_cast<int>(floor(Rational(1 / b_)).get_si()) + 1;
}

BorderCase IntervalSpec::border_case() const {
  if (a_ >= Rational(1, p_)) return BorderCase::None;
  if (a_ >= Rational(1, p_ + 1)) return BorderCase::One;
  if (a_ >= Rational(1, p_ + 2)) return BorderCase::Two;
  return BorderCase::Many;
}

std::string IntervalSpec::to_string() const {
  return "(" + format_rational(a_) + ", " + format_rational(b_) + ")";
}

const Claim* GeneratedFamily::find(const std::string& subject) const {
  for (const auto& c : claims)
    if (c.subject() == subject) return &c;
  return nullptr;
}

std::size_t GeneratedFamily::expected(const std::string& subject) const {
  const Claim* c = find(subject);
  if (c == nullptr) throw Error(ErrorCode::InvalidArgument, "family has no claim for " + subject);
  return c->expected;
}

Rational default_eps(const std::function<bool(const Rational&)>& ok) {
  Rational eps(1, 10);
  for (int m = 1; m <= 40; ++m, eps /= 10) {
    if (ok(eps)) return eps;
  }
  throw Error(ErrorCode::BadEps, "no power of 1/10 down to 1e-40 satisfies the family's eps bound");
}

namespace {

std::string provenance(const std::string& name, std::initializer_list<std::pair<const char*, std::string>> params) {
  std::string out = name + "(";
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out += ", ";
    out += std::string(key) + "=" + value;
    first = false;
  }
  return out + ")";
}

void append(Sequence& seq, const Rational& value, std::int64_t copies = 1) {
  for (std::int64_t i = 0; i < copies; ++i) seq.items.emplace_back(value);
}

std::vector<ItemSize> group_of(std::initializer_list<std::pair<Rational, std::int64_t>> parts) {
  std::vector<ItemSize> g;
  for (const auto& [value, copies] : parts)
    for (std::int64_t i = 0; i < copies; ++i) g.emplace_back(value);
  return g;
}

/// OPT claim backed by a certificate; exact when the volume bound or an
/// exhaustive search meets it.
Claim opt_claim(const Sequence& seq, const PartitionCertificate& cert) {
  Claim c;
  c.expected = cert.claimed_covered;
  c.exactness = Exactness::LowerBound;
  if (opt_volume_bound(seq) == cert.claimed_covered ||
      (seq.size() <= 16 && opt_exact(seq) == cert.claimed_covered))
    c.exactness = Exactness::Exact;
  return c;
}

Claim alg_claim(const AlgorithmId& alg, std::size_t expected) {
  return Claim{alg, expected, Exactness::Exact};
}

void require_eps(bool ok, const Rational& eps, const std::string& bound) {
  if (!ok) throw Error(ErrorCode::BadEps, "eps = " + format_rational(eps) + " violates " + bound);
}

}  // namespace

void verify_family(const GeneratedFamily& family) {
  auto mismatch = [](const std::string& what) { return Error(ErrorCode::ClaimMismatch, what); };
  for (const auto& claim : family.claims) {
    if (claim.algorithm) {
      const std::size_t got = run(*claim.algorithm, family.seq).covered();
      if (got != claim.expected)
        throw mismatch(claim.subject() + " covers " + std::to_string(got) + ", claimed " + std::to_string(claim.expected));
      continue;
    }
    if (!family.opt_cert) throw mismatch("OPT claim without a certificate");
    if (family.opt_cert->claimed_covered != claim.expected) throw mismatch("OPT claim differs from certificate");
    const std::size_t verified = verify_certificate(family.seq, *family.opt_cert);
    if (verified < family.opt_cert->claimed_covered)
      throw mismatch("certificate verifies " + std::to_string(verified) + " < claimed " + std::to_string(family.opt_cert->claimed_covered));
    if (claim.exactness == Exactness::Exact && opt_volume_bound(family.seq) != claim.expected &&
        !(family.seq.size() <= 16 && opt_exact(family.seq) == claim.expected))
      throw mismatch("exact OPT claim is not confirmed by the volume bound or exhaustive search");
  }
  for (const auto& seg : family.segments) {
    Sequence part;
    part.items.assign(family.seq.items.begin() + static_cast<std::ptrdiff_t>(seg.begin),
                      family.seq.items.begin() + static_cast<std::ptrdiff_t>(seg.end));
    const std::size_t got = dnf_run(part).covered();
    if (got != seg.dnf_expected)
      throw mismatch("segment " + seg.label + ": DNF covers " + std::to_string(got) + ", claimed " + std::to_string(seg.dnf_expected));
  }
  if (family.interval) {
    for (const auto& item : family.seq.items)
      if (!family.interval->contains(item.value()))
        throw mismatch("item " + to_string(item) + " outside " + family.interval->to_string());
  }
}

GeneratedFamily gen_dnf_one_border(int x, std::int64_t n, std::optional<Rational> eps_in) {
  if (x < 2 || n < 0) throw Error(ErrorCode::BadParams, "need x >= 2 and n >= 0");
  const Rational unit_item(1, x);
  // Default keeps 1/x +- eps inside (1/(x+1), 1/(x-1)).
  const Rational eps = eps_in ? *eps_in : default_eps([&](const Rational& e) { return e < Rational(1, x * (x + 1)); });
  require_eps(eps > 0 && eps < unit_item, eps, "0 < eps < 1/x");

  GeneratedFamily fam;
  fam.eps = eps;
  fam.scale_n = n;
  fam.seq.provenance = provenance("dnf_one_border", {{"x", std::to_string(x)}, {"n", std::to_string(n)}, {"eps", format_rational(eps)}});
  for (std::int64_t block = 0; block < x * n; ++block) {
    append(fam.seq, unit_item, x - 1);
    append(fam.seq, unit_item - eps);
    append(fam.seq, unit_item + eps);
  }

  PartitionCertificate cert;
  for (std::int64_t i = 0; i < x * n; ++i)
    cert.groups.push_back(group_of({{unit_item - eps, 1}, {unit_item + eps, 1}, {unit_item, x - 2}}));
  for (std::int64_t i = 0; i < n; ++i) cert.groups.push_back(group_of({{unit_item, x}}));
  cert.claimed_covered = static_cast<std::size_t>((x + 1) * n);

  fam.claims.push_back(alg_claim(AlgorithmId::dnf(), static_cast<std::size_t>(x * n)));
  fam.claims.push_back(opt_claim(fam.seq, cert));
  fam.opt_cert = std::move(cert);
  const IntervalSpec natural(Rational(1, x + 1), Rational(1, x - 1));
  if (natural.contains(unit_item - eps) && natural.contains(unit_item + eps)) fam.interval = natural;
  verify_family(fam);
  return fam;
}

GeneratedFamily gen_dhk_one_border(int p, std::int64_t n, std::optional<Rational> eps_in,
                                   std::optional<IntervalSpec> spec_in) {
  if (p < 2) throw Error(ErrorCode::BadP, "need p >= 2");
  if (n < 0) throw Error(ErrorCode::BadParams, "need n >= 0");
  const IntervalSpec spec = spec_in ? *spec_in : IntervalSpec(Rational(1, p + 1), Rational(1, p - 1));
  if (spec.p() != p || spec.border_case() != BorderCase::One)
    throw Error(ErrorCode::BadParams, "interval " + spec.to_string() + " is not a one-border interval with maximal border 1/" + std::to_string(p));

  const Rational border(1, p);
  // Both sizes stay inside (a,b): the shaved item above a, the large one below b.
  Rational bound = (p - 1) * (border - spec.a());
  if (spec.b() - border < bound) bound = spec.b() - border;
  const Rational eps = eps_in ? *eps_in : default_eps([&](const Rational& e) { return e < bound; });
  require_eps(eps > 0 && eps < bound, eps, "0 < eps < min{(p-1)(1/p - a), b - 1/p} = " + format_rational(bound));

  const Rational shaved = border - eps / (p - 1);
  const Rational large = border + eps;
  GeneratedFamily fam;
  fam.eps = eps;
  fam.scale_n = n;
  fam.seq.provenance = provenance("dhk_one_border", {{"p", std::to_string(p)}, {"n", std::to_string(n)}, {"eps", format_rational(eps)}});
  for (std::int64_t i = 0; i < n; ++i) {
    append(fam.seq, shaved, p - 1);
    append(fam.seq, large);
  }

  PartitionCertificate cert;
  for (std::int64_t i = 0; i < n; ++i) cert.groups.push_back(group_of({{large, 1}, {shaved, p - 1}}));
  cert.claimed_covered = static_cast<std::size_t>(n);

  const auto dhk_value = static_cast<std::size_t>(n * (p - 1) / (p + 1) + n / p);
  fam.claims.push_back(opt_claim(fam.seq, cert));
  fam.claims.push_back(alg_claim(AlgorithmId::dhk(p), dhk_value));
  fam.claims.push_back(alg_claim(AlgorithmId::dhk(p + 1), dhk_value));
  fam.opt_cert = std::move(cert);
  fam.interval = spec;
  verify_family(fam);
  return fam;
}

GeneratedFamily gen_dnf_two_border(int p, std::int64_t n, std::optional<Rational> eps_in) {
  if (p < 3) throw Error(ErrorCode::BadP, "need p >= 3 so that every part is well formed");
  if (n < 1) throw Error(ErrorCode::BadParams, "need n >= 1");

  const Rational c(1, p + 1);
  const Rational q(1, p);
  const Rational big = make_rational(p + 2, p * (p + 1));  // c + big = 2/p
  const std::int64_t drift = (p + 1) * n * (p - 2);  // largest multiple of eps added to c
  const std::int64_t scale = drift + 1;

  // eps bound. With a = c - scale*eps and b = 1/(p-1):
  //  * scale*eps <= 1/((p+1)(p+2)) keeps a >= 1/(p+2), so (a,b) is a
  //    two-border interval, and keeps every c +- i(p-2)eps inside (a, 1/p);
  //  * 2eps < 1/p - c keeps 1/p - 2eps medium;
  //  * eps < 1/(p-1) - big = 2/(p(p+1)(p-1)) keeps big + eps below b.
  // Both eps < 1/(4(p+1)^2 scale) and eps < 1/(p(p+1)(p-1)) imply all three
  // for p >= 3; the items are then re-checked against (a,b) exactly.
  const Rational bound_drift(1, 4L * (p + 1) * (p + 1) * scale);
  const Rational bound_big(1, static_cast<long>(p) * (p + 1) * (p - 1));
  auto within = [&](const Rational& e) { return e > 0 && e < bound_drift && e < bound_big; };
  const Rational eps = eps_in ? *eps_in : default_eps(within);
  require_eps(within(eps), eps, "eps < min{1/(4(p+1)^2((p+1)n(p-2)+1)), 1/(p(p+1)(p-1))}");

  GeneratedFamily fam;
  fam.eps = eps;
  fam.scale_n = n;
  fam.seq.provenance = provenance("dnf_two_border", {{"p", std::to_string(p)}, {"n", std::to_string(n)}, {"eps", format_rational(eps)}});
  auto& seq = fam.seq;
  auto mark_segment = [&](std::string label, std::size_t begin, std::int64_t dnf) {
    fam.segments.push_back({std::move(label), begin, seq.size(), static_cast<std::size_t>(dnf)});
  };

  std::size_t begin = seq.size();
  for (std::int64_t i = 0; i < (p + 1) * (p - 2) * n; ++i) {
    append(seq, q, p - 1);
    append(seq, q - 2 * eps);
    append(seq, big + eps);
  }
  mark_segment("part1", begin, (p + 1) * (p - 2) * n);

  begin = seq.size();
  for (std::int64_t i = 0; i < (p + 1) * n; ++i) {
    append(seq, c, p);
    append(seq, c - eps);
    append(seq, big + eps);
  }
  mark_segment("part2", begin, (p + 1) * n);

  begin = seq.size();
  for (std::int64_t i = 1; i <= (p + 1) * n - 1; ++i) {
    append(seq, c + i * (p - 2) * eps);
    append(seq, c - (i + 1) * (p - 2) * eps);
    append(seq, c + eps, p - 2);
    append(seq, c - eps);
    append(seq, big + eps);
  }
  mark_segment("part3", begin, (p + 1) * n - 1);

  begin = seq.size();
  append(seq, c - (p - 2) * eps);
  append(seq, c + eps, p - 2);
  append(seq, c - eps);
  append(seq, big + eps);
  mark_segment("part4", begin, 1);

  begin = seq.size();
  append(seq, c + drift * eps);
  mark_segment("part5", begin, 0);

  // Certificate: the four blocks of the optimal packing, each summing to 1.
  PartitionCertificate cert;
  for (std::int64_t i = 0; i < (p + 1) * (p - 2) * n; ++i)
    cert.groups.push_back(group_of({{big + eps, 1}, {q - 2 * eps, 1}, {q, p - 3}, {c + eps, 1}}));
  for (std::int64_t i = 0; i < 2 * (p + 1) * n; ++i)
    cert.groups.push_back(group_of({{big + eps, 1}, {q, p - 2}, {c - eps, 1}}));
  for (std::int64_t i = 1; i <= (p + 1) * n; ++i)
    cert.groups.push_back(group_of({{c + i * (p - 2) * eps, 1}, {c - i * (p - 2) * eps, 1}, {c, p - 1}}));
  for (std::int64_t i = 0; i < n; ++i) cert.groups.push_back(group_of({{c, p + 1}}));
  cert.claimed_covered = static_cast<std::size_t>((p * p + 2 * p + 2) * n);

  fam.claims.push_back(alg_claim(AlgorithmId::dnf(), static_cast<std::size_t>(p * (p + 1) * n)));
  fam.claims.push_back(opt_claim(seq, cert));
  fam.opt_cert = std::move(cert);

  const IntervalSpec spec(c - scale * eps, Rational(1, p - 1));
  if (spec.border_case() != BorderCase::Two || spec.p() != p)
    throw Error(ErrorCode::BadEps, "eps too large: " + spec.to_string() + " is not a two-border interval");
  fam.interval = spec;
  verify_family(fam);
  return fam;
}

GeneratedFamily gen_dhk_two_border(int p, std::int64_t n, std::optional<Rational> eps_in) {
  if (p < 2) throw Error(ErrorCode::BadP, "need p >= 2");
  if (n < 0) throw Error(ErrorCode::BadParams, "need n >= 0");
  const Rational c(1, p + 1);
  const Rational q(1, p);
  const Rational big = make_rational(p + 2, p * (p + 1));
  // Small above 1/(p+2), large below 1/(p-1), medium at or above 1/(p+1).
  auto within = [&](const Rational& e) {
    return e > 0 && c - e > Rational(1, p + 2) && big + (p - 1) * e < Rational(1, p - 1) && q - e > c;
  };
  const Rational eps = eps_in ? *eps_in : default_eps(within);
  require_eps(within(eps), eps, "items must stay in their harmonic intervals inside (1/(p+2), 1/(p-1))");

  const Rational small = c - eps;
  const Rational large = big + (p - 1) * eps;
  const Rational medium = q - eps;
  GeneratedFamily fam;
  fam.eps = eps;
  fam.scale_n = n;
  fam.seq.provenance = provenance("dhk_two_border", {{"p", std::to_string(p)}, {"n", std::to_string(n)}, {"eps", format_rational(eps)}});
  append(fam.seq, small, n);
  append(fam.seq, large, n);
  append(fam.seq, medium, n * (p - 2));

  PartitionCertificate cert;
  for (std::int64_t i = 0; i < n; ++i) cert.groups.push_back(group_of({{small, 1}, {large, 1}, {medium, p - 2}}));
  cert.claimed_covered = static_cast<std::size_t>(n);

  const auto dhk_value = static_cast<std::size_t>(n / (p + 2) + n / p + n * (p - 2) / (p + 1));
  fam.claims.push_back(opt_claim(fam.seq, cert));
  fam.claims.push_back(alg_claim(AlgorithmId::dhk(p + 1), dhk_value));
  fam.claims.push_back(alg_claim(AlgorithmId::dhk(p + 2), dhk_value));
  fam.opt_cert = std::move(cert);
  fam.interval = IntervalSpec(Rational(1, p + 2), Rational(1, p - 1));
  verify_family(fam);
  return fam;
}

GeneratedFamily gen_rwor(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "need n >= 1");
  GeneratedFamily fam;
  fam.scale_n = n;
  fam.seq.provenance = provenance("rwor", {{"n", std::to_string(n)}});
  const Rational half(1, 2);
  const Rational tiny(1, 2 * n);
  for (std::int64_t i = 0; i < 2 * n; ++i) {
    append(fam.seq, half);
    append(fam.seq, tiny, n - 1);
    append(fam.seq, half);
  }
  fam.claims.push_back(alg_claim(AlgorithmId::dnf(), static_cast<std::size_t>(2 * n)));
  fam.claims.push_back(alg_claim(AlgorithmId::dhk(2), static_cast<std::size_t>(3 * n - 1)));
  fam.claims.push_back(alg_claim(AlgorithmId::dhk(3), static_cast<std::size_t>(3 * n - 1)));
  verify_family(fam);
  return fam;
}

namespace {

void require_two_size_eps(std::size_t n, const Rational& eps) {
  const bool ok = eps > 0 && (n == 0 ? eps < 1 : eps * static_cast<unsigned long>(n) < 1);
  require_eps(ok, eps, "0 < eps < 1/n");
}

}  // namespace

Sequence gen_two_size_iid(std::size_t n, const Rational& eps, std::uint64_t seed) {
  require_two_size_eps(n, eps);
  Sequence seq;
  seq.provenance = provenance("two_size_iid", {{"n", std::to_string(n)}, {"eps", format_rational(eps)}, {"seed", std::to_string(seed)}});
  Rng rng(seed);
  const Rational large = 1 - eps;
  for (std::size_t i = 0; i < n; ++i) seq.items.emplace_back(rng.coin() ? large : eps);
  return seq;
}

Sequence gen_two_size_counts(std::size_t large_count, std::size_t small_count, const Rational& eps,
                             std::uint64_t seed) {
  const std::size_t n = large_count + small_count;
  require_two_size_eps(n, eps);
  std::vector<Rational> base;
  base.reserve(n);
  base.insert(base.end(), large_count, Rational(1 - eps));
  base.insert(base.end(), small_count, eps);
  Sequence seq;
  seq.provenance = provenance("two_size", {{"l", std::to_string(large_count)}, {"s", std::to_string(small_count)},
                                           {"eps", format_rational(eps)}, {"seed", std::to_string(seed)}});
  for (const auto i : shuffled_order(n, seed, 0)) seq.items.emplace_back(base[i]);
  return seq;
}

GeneratedFamily gen_minmin_worst(int p, const Rational& b, const Rational& eps, std::int64_t bins) {
  if (p < 2 || bins < 0) throw Error(ErrorCode::BadParams, "need p >= 2 and bins >= 0");
  if (!(b > Rational(1, p) && b <= Rational(1, p - 1) && b < 1))
    throw Error(ErrorCode::BadParams, "need 1/p < b <= 1/(p-1) and b < 1");
  // a = 1/(p+1); the last item b - eps must still close the bin.
  const Rational a(1, p + 1);
  if (!(eps > 0 && eps < Rational(1, p) - a && (p + 1) * eps <= b))
    throw Error(ErrorCode::BadParams, "need 0 < eps < 1/p - 1/(p+1) and (p+1) eps <= b");

  GeneratedFamily fam;
  fam.eps = eps;
  fam.scale_n = bins;
  fam.seq.provenance = provenance("minmin_worst", {{"p", std::to_string(p)}, {"b", format_rational(b)},
                                                   {"eps", format_rational(eps)}, {"bins", std::to_string(bins)}});
  for (std::int64_t i = 0; i < bins; ++i) {
    append(fam.seq, Rational(1, p) - eps, p);
    append(fam.seq, b - eps);
  }
  fam.claims.push_back(alg_claim(AlgorithmId::dnf(), static_cast<std::size_t>(bins)));
  fam.interval = IntervalSpec(a, b);
  verify_family(fam);
  return fam;
}

GeneratedFamily gen_minmin_opt_worst(int p, const Rational& eps, std::int64_t bins) {
  if (p < 2 || bins < 0) throw Error(ErrorCode::BadParams, "need p >= 2 and bins >= 0");
  if (!(eps > 0 && eps <= Rational(1, p * (p + 1))))
    throw Error(ErrorCode::BadParams, "need 0 < eps <= 1/(p(p+1)) so p+1 items cover a bin");
  const Rational item = Rational(1, p) - eps;
  GeneratedFamily fam;
  fam.eps = eps;
  fam.scale_n = bins;
  fam.seq.provenance = provenance("minmin_opt_worst", {{"p", std::to_string(p)}, {"eps", format_rational(eps)}, {"bins", std::to_string(bins)}});
  append(fam.seq, item, (p + 1) * bins);
  PartitionCertificate cert;
  for (std::int64_t i = 0; i < bins; ++i) cert.groups.push_back(group_of({{item, p + 1}}));
  cert.claimed_covered = static_cast<std::size_t>(bins);
  fam.claims.push_back(opt_claim(fam.seq, cert));
  fam.opt_cert = std::move(cert);
  verify_family(fam);
  return fam;
}

std::vector<double> gen_uniform(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> out(n);
  for (auto& x : out) x = rng.uniform_open01();
  return out;
}

Sequence to_exact_sequence(std::span<const double> draws, std::string provenance) {
  Sequence seq;
  seq.provenance = std::move(provenance);
  seq.items.reserve(draws.size());
  for (const double x : draws) seq.items.emplace_back(Rational(x));
  return seq;
}

}  // namespace bincover
