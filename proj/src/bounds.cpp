#include "aobound/bounds.hpp"

#include "aobound/primes.hpp"
#include "aobound/rootsys.hpp"

#include <algorithm>

namespace aobound {

namespace {

constexpr long kMaxCuttingDim = 1L << 16;
constexpr std::uint64_t kSieveProductLimit = 1ULL << 26;

Magnitude two_pi(unsigned bits) {
  const Bracket pi = pi_bracket();
  return Magnitude::from_value_bounds(2 * pi.low, 2 * pi.high, bits);
}

// Smallest integer m >= 1 certified to be >= the value of x.
Integer integer_ceiling(const Magnitude& x, unsigned bits) {
  const Rational& hi = x.log2_high();
  if (hi <= 0) return 1;
  if (hi > 62) return pow2(ceil_of(hi).get_ui());
  Integer lo = 1;
  Integer up = pow2(ceil_of(hi).get_ui());
  while (lo < up) {
    const Integer mid = (lo + up) / 2;
    if (log2_bracket(mid, bits).low >= hi) up = mid;
    else lo = mid + 1;
  }
  return up;
}

Integer product(const std::set<std::uint64_t>& primes) {
  Integer p = 1;
  for (std::uint64_t q : primes) p *= Integer(static_cast<unsigned long>(q));
  return p;
}

long cutting_depth(const SubvarietyProblem& problem) {
  return std::max(problem.dim_Z - 2, 0L);
}

}  // namespace

void validate(const SubvarietyProblem& problem) {
  if (problem.dim_Z < 1) throw DomainError("problem: dim_Z must be >= 1");
  if (problem.dim_Z > kMaxCuttingDim)
    throw DomainError("problem: dim_Z above " + std::to_string(kMaxCuttingDim));
  if (problem.deg_Z < 1) throw DomainError("problem: deg_Z must be >= 1");
}

void validate(const SpecialSubgroupData& data, long ambient_rank) {
  for (const auto& f : data.factors) {
    validate(f.type);
    if (f.degree < 1) throw DomainError("subgroup factor " + f.type.name() + ": degree must be >= 1");
    if (f.type.rank > ambient_rank)
      throw DomainError("subgroup factor " + f.type.name() + ": rank exceeds ambient rank");
  }
  for (std::uint64_t p : data.sigma_V)
    if (!is_prime_u64(p)) throw DomainError("subgroup: sigma_V entry " + std::to_string(p) + " is not prime");
  if (data.index_lower < 1) throw DomainError("subgroup: index_lower must be >= 1");
  if (data.pi_tilde < 1) throw DomainError("subgroup: pi_tilde must be >= 1");
}

Magnitude prasad_factor(const SpecialSubgroupData& data, unsigned bits) {
  const Magnitude tp = two_pi(bits);
  Magnitude out;
  for (const auto& f : data.factors) {
    Magnitude local;
    for (int m : exponents(f.type)) {
      const Magnitude term = mag_div(mag_factorial(static_cast<unsigned long>(m), bits),
                                     mag_pow(tp, Rational(m + 1), bits), bits);
      local = mag_mul(local, term, bits);
    }
    out = mag_mul(out, mag_pow(local, Rational(f.degree), bits), bits);
  }
  return out;
}

Magnitude volume_lower_bound(const ConstantsLedger& ledger, const SpecialSubgroupData& data,
                             unsigned bits) {
  Magnitude v = mag_max(prasad_factor(data, bits), ledger.magnitude("prasad_floor", bits));
  v = mag_div(v, ledger.magnitude("B", bits), bits);
  v = mag_div(v, ledger.magnitude("c2", bits), bits);
  v = mag_div(v, mag_pow(ledger.magnitude("C", bits), Rational(static_cast<long>(data.sigma_V.size())), bits),
              bits);
  v = mag_mul(v, Magnitude::from_integer(data.index_lower, bits), bits);
  v = mag_mul(v, mag_pow(Magnitude::from_integer(data.pi_tilde, bits), Rational(1, 2), bits), bits);
  return v;
}

C1Delta synthesize_c1_delta(const ConstantsLedger& ledger, unsigned bits) {
  const Magnitude C = ledger.magnitude("C", bits);
  const Magnitude c4 = ledger.magnitude("c4", bits);
  Magnitude top = mag_max(ledger.magnitude("c3", bits), ledger.magnitude("c5", bits));
  top = mag_max(top, mag_pow(C, Rational(4), bits));
  top = mag_max(top, mag_pow(mag_div(C, c4, bits), Rational(4, 3), bits));

  C1Delta out;
  out.delta = kDelta;
  out.threshold = integer_ceiling(top, bits);
  const Integer& T = out.threshold;

  // log2 prod_{p <= T} C p^(1/4), bracketed.
  Rational prod_low;
  Rational prod_high;
  if (T <= kSieveProductLimit) {
    const auto table = sieve_primes(std::max<std::uint64_t>(T.get_ui(), 2));
    const Rational count{static_cast<unsigned long>(table.primes.size())};
    Integer primorial;
    mpz_primorial_ui(primorial.get_mpz_t(), T.get_ui());
    const Bracket lp = log2_bracket(primorial, bits);
    prod_low = count * C.log2_low() + lp.low / 4;
    prod_high = count * C.log2_high() + lp.high / 4;
  } else {
    // pi(T) <= T and prod_{p <= T} p <= 4^T: c1 becomes the smaller
    // constant with the product replaced by C^T 4^(T/4).
    out.chebyshev_product = true;
    const Rational t{T};
    prod_low = t * C.log2_low() + t / 2;
    prod_high = t * C.log2_high() + t / 2;
  }
  const Magnitude prod = Magnitude::from_log2(prod_low, prod_high, bits);

  Magnitude c1 = ledger.magnitude("prasad_floor", bits);
  c1 = mag_div(c1, ledger.magnitude("B", bits), bits);
  c1 = mag_div(c1, ledger.magnitude("c2", bits), bits);
  c1 = mag_div(c1, prod, bits);
  out.c1 = c1;

  // The first prime above T must already pass; the rest follow by
  // monotonicity of both credits in p.
  ConstantsLedger probe = ledger;
  probe.set("c1_threshold", T, "theorem:mainbound", "");
  const Integer p = boundary_points(T, 1).front();
  switch (certify_c1_boundary(probe, p, bits)) {
    case Certified::yes:
      break;
    case Certified::indeterminate:
      throw IndeterminateError("c1_threshold", "c1 boundary check at p = " + to_string(p) +
                                                   " is indeterminate; increase precision");
    case Certified::no:
      throw std::logic_error("c1 boundary check refuted at p = " + to_string(p));
  }
  return out;
}

Certified certify_c1_boundary(const ConstantsLedger& ledger, const Integer& p, unsigned bits) {
  const Magnitude mp = Magnitude::from_integer(p, bits);
  const Magnitude credit = mag_min(mag_mul(ledger.magnitude("c4", bits), mp, bits),
                                   mag_pow(mp, Rational(1, 2), bits));
  const Magnitude net = mag_div(credit, ledger.magnitude("C", bits), bits);
  return certify_less_equal(mag_pow(mp, kDelta, bits), net);
}

std::vector<Integer> boundary_points(const Integer& threshold, int count) {
  std::vector<Integer> out;
  if (threshold < pow2(62)) {
    std::uint64_t p = threshold < 1 ? 1 : threshold.get_ui();
    for (int i = 0; i < count; ++i) {
      p = next_prime_u64(p);
      out.emplace_back(static_cast<unsigned long>(p));
    }
  } else {
    for (int i = 1; i <= count; ++i) out.push_back(threshold + i);
  }
  return out;
}

Magnitude degree_lower_bound(const ConstantsLedger& ledger, const SpecialSubgroupData& data,
                             unsigned bits) {
  const Magnitude pi_v = Magnitude::from_integer(product(data.sigma_V), bits);
  return mag_mul(ledger.magnitude("c1", bits), mag_pow(pi_v, ledger.rational("delta"), bits), bits);
}

Magnitude best_lower_bound(const ConstantsLedger& ledger, const SpecialSubgroupData& data,
                           unsigned bits) {
  return mag_max(degree_lower_bound(ledger, data, bits), volume_lower_bound(ledger, data, bits));
}

Magnitude iteration_step(const ConstantsLedger& ledger, const Magnitude& deg, const Integer& p,
                         unsigned bits) {
  const Integer e = 2 * ledger.integer("f") + ledger.integer("k");
  return mag_mul(mag_pow(Magnitude::from_integer(p, bits), Rational(e), bits),
                 mag_pow(deg, Rational(2), bits), bits);
}

Magnitude admissible_prime_ceiling(const ConstantsLedger& ledger, const Magnitude& x,
                                   const Integer& N, unsigned bits) {
  // ln(x / c1) / (delta ln 2) = log2(x / c1) / delta.
  const Magnitude c1 = ledger.magnitude("c1", bits);
  const Rational delta = ledger.rational("delta");
  const Rational zero = 0;
  const Rational base{N + 1};
  const Rational q_low = round_down(std::max(zero, Rational(x.log2_low() - c1.log2_high())) / delta + base, bits);
  const Rational q_high = round_up(std::max(zero, Rational(x.log2_high() - c1.log2_low())) / delta + base, bits);
  // P = c^(-1/(1-eps)) Q^(1/(1-eps)) with c = 1/2.
  const Rational power = 1 / (1 - kPrimeDensityEpsilon);
  const Rational log_c = -log2_bracket(kPrimeDensityConstant, bits).low;  // exact for 1/2
  return Magnitude::from_log2(power * (log_c + log2_bracket(q_low, bits).low),
                              power * (log_c + log2_bracket(q_high, bits).high), bits);
}

Magnitude cutting_bound(const ConstantsLedger& ledger, const SubvarietyProblem& problem,
                        const Integer& N, const Magnitude& x, unsigned bits) {
  validate(problem);
  const long t = cutting_depth(problem);
  const Magnitude deg = Magnitude::from_integer(problem.deg_Z, bits);
  if (t == 0) return deg;
  const Integer e = 2 * ledger.integer("f") + ledger.integer("k");
  const Magnitude P = admissible_prime_ceiling(ledger, x, N, bits);
  const Magnitude step = mag_mul(ledger.magnitude("d_cmp", bits), mag_pow(P, Rational(e), bits), bits);
  return mag_mul(mag_pow(step, Rational(t), bits),
                 mag_pow(deg, Rational(pow2(static_cast<unsigned long>(t))), bits), bits);
}

Certified certify_slope_below_one(const ConstantsLedger& ledger, const SubvarietyProblem& problem,
                                  const Integer& N, const Integer& m, unsigned bits) {
  const long t = cutting_depth(problem);
  if (t == 0) return Certified::yes;
  // For log2 x > log2 c1, log2 F = const + t e (1/(1-eps)) log2 Q with
  // Q = (log2 x - log2 c1)/delta + N + 1, so
  // d log2 F / d log2 x = t e / ((1-eps) delta Q ln 2), decreasing in x.
  const Magnitude c1 = ledger.magnitude("c1", bits);
  const Rational delta = ledger.rational("delta");
  const Rational mx{m};
  if (mx <= c1.log2_high()) return mx <= c1.log2_low() ? Certified::no : Certified::indeterminate;
  const Rational lhs{Integer(t) * (2 * ledger.integer("f") + ledger.integer("k"))};
  const Rational scale = (1 - kPrimeDensityEpsilon) * delta;
  const Bracket ln2 = ln2_bracket(bits);
  const Rational q_low = (mx - c1.log2_high()) / delta + N + 1;
  const Rational q_high = (mx - c1.log2_low()) / delta + N + 1;
  if (lhs < scale * q_low * ln2.low) return Certified::yes;
  if (lhs >= scale * q_high * ln2.high) return Certified::no;
  return Certified::indeterminate;
}

FinalBound final_degree_bound(const ConstantsLedger& ledger, const SubvarietyProblem& problem,
                              const Integer& N, const FinalBoundOptions& options) {
  validate(problem);
  const unsigned bits = options.precision_bits;
  FinalBound out;
  if (cutting_depth(problem) == 0) {
    out.exact = problem.deg_Z;
    out.x0 = Magnitude::from_integer(problem.deg_Z, bits);
    out.f_at_x0 = out.x0;
    out.f_at_2x0 = out.x0;
    out.below_at_x0 = certify_less_equal(out.f_at_x0, out.x0);
    out.below_at_2x0 = certify_less(out.f_at_2x0, mag_mul(out.x0, Magnitude::power_of_two(1), bits));
    out.evaluations = 0;
    return out;
  }

  auto F = [&](const Integer& m) {
    ++out.evaluations;
    return cutting_bound(ledger, problem, N, Magnitude::power_of_two(Rational(m), bits), bits);
  };
  auto ok = [&](const Integer& m) {
    if (certify_slope_below_one(ledger, problem, N, m, bits) != Certified::yes) return false;
    return certify_less(F(m), Magnitude::power_of_two(Rational(m), bits)) == Certified::yes;
  };
  auto overflow = [&](const Integer& m) {
    throw OverflowError("final_degree_bound: log2 x reached " + to_string(m) +
                        " above --max-log2 " + to_string(options.max_log2) + "\n" +
                        serialize_ledger(ledger, "ledger."));
  };

  Integer lo = 0;  // not ok (or below the grid)
  Integer hi = 1;
  while (!ok(hi)) {
    lo = hi;
    hi *= 2;
    if (hi > options.max_log2) {
      if (lo >= options.max_log2 || !ok(options.max_log2)) overflow(hi);
      hi = options.max_log2;
      break;
    }
  }
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid;
  }

  out.log2_x0 = hi;
  out.x0 = Magnitude::power_of_two(Rational(hi), bits);
  out.f_at_x0 = F(hi);
  out.f_at_2x0 = F(hi + 1);
  out.below_at_x0 = certify_less(out.f_at_x0, out.x0);
  out.below_at_2x0 = certify_less(out.f_at_2x0, Magnitude::power_of_two(Rational(hi + 1), bits));
  out.slope_below_one = certify_slope_below_one(ledger, problem, N, hi, bits);
  return out;
}

}  // namespace aobound
