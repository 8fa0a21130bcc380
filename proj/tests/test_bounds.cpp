#include "aobound/bounds.hpp"
#include "aobound/primes.hpp"

#include <doctest.h>
#include <mpfr.h>

using namespace aobound;

namespace {

AmbientDatumSpec reference_spec() {
  AmbientDatumSpec s;
  s.factors = {{RootDatumSpec{Family::A, 1}, 1}};
  return s;
}

const ConstantsLedger& reference() {
  static const ConstantsLedger L = assemble_ledger(reference_spec());
  return L;
}

// Reference ledger with small f, k so the fixpoint is cheap to reason about.
ConstantsLedger toy(long f, long k) {
  ConstantsLedger L = reference();
  L.set("f", Integer(f), "theorem:hecke", "toy");
  L.set("k", Integer(k), "theorem:hecke", "toy");
  return L;
}

// log2 of a real computed by MPFR at 512 bits; m must straddle it.
bool encloses(const Magnitude& m, mpfr_t log2_value) {
  return mpfr_cmp_q(log2_value, m.log2_low().get_mpq_t()) >= 0 &&
         mpfr_cmp_q(log2_value, m.log2_high().get_mpq_t()) <= 0;
}

SpecialSubgroupData a1_subgroup() {
  SpecialSubgroupData d;
  d.factors = {{RootDatumSpec{Family::A, 1}, 1}};
  return d;
}

}  // namespace

TEST_CASE("prasad_factor") {
  mpfr_t v, t;
  mpfr_inits2(512, v, t, static_cast<mpfr_ptr>(nullptr));
  // log2(1 / (4 pi^2)) = -2 - 2 log2 pi
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_log2(t, t, MPFR_RNDN);
  mpfr_mul_si(v, t, -2, MPFR_RNDN);
  mpfr_sub_ui(v, v, 2, MPFR_RNDN);
  const Magnitude a1 = prasad_factor(a1_subgroup());
  CHECK(encloses(a1, v));
  CHECK(prasad_factor(SpecialSubgroupData{}) == Magnitude());
  SpecialSubgroupData twice = a1_subgroup();
  twice.factors[0].degree = 2;
  const Magnitude sq = prasad_factor(twice);
  mpfr_mul_ui(v, v, 2, MPFR_RNDN);
  CHECK(encloses(sq, v));
  CHECK(sq.log2_low() <= 2 * a1.log2_high());
  // G2: exponents 1, 5 -> 1! 5! / (2 pi)^8
  SpecialSubgroupData g2;
  g2.factors = {{RootDatumSpec{Family::G, 2}, 1}};
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_mul_ui(t, t, 2, MPFR_RNDN);
  mpfr_log2(t, t, MPFR_RNDN);
  mpfr_mul_si(t, t, -8, MPFR_RNDN);
  mpfr_set_ui(v, 120, MPFR_RNDN);
  mpfr_log2(v, v, MPFR_RNDN);
  mpfr_add(v, v, t, MPFR_RNDN);
  CHECK(encloses(prasad_factor(g2), v));
  mpfr_clears(v, t, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("volume_lower_bound structure") {
  const auto& L = reference();
  const auto d = a1_subgroup();
  const Magnitude v = volume_lower_bound(L, d);
  const Magnitude expect =
      mag_div(mag_div(prasad_factor(d), L.magnitude("B")), L.magnitude("c2"));
  CHECK(v.log2_low() <= expect.log2_high());
  CHECK(expect.log2_low() <= v.log2_high());

  auto doubled = d;
  doubled.index_lower = 2;
  const Magnitude v2 = volume_lower_bound(L, doubled);
  CHECK(v2.log2_low() == v.log2_low() + 1);

  auto bad = d;
  bad.sigma_V = {3};
  const Magnitude v3 = volume_lower_bound(L, bad);
  CHECK(v3.log2_low() == v.log2_low() - 1);  // C = 2

  auto with_pi = bad;
  with_pi.pi_tilde = 3;
  const Magnitude v4 = volume_lower_bound(L, with_pi);
  CHECK(certify_less(v3, v4) == Certified::yes);
}

TEST_CASE("c1 and delta") {
  const auto& L = reference();
  const C1Delta cd = synthesize_c1_delta(L);
  CHECK(cd.delta == Rational(1, 4));
  CHECK(cd.threshold == 65536);
  CHECK(cd.threshold >= ipow(L.integer("C"), 4));
  CHECK_FALSE(cd.chebyshev_product);
  CHECK(cd.c1 == L.magnitude("c1"));
  const auto pts = boundary_points(cd.threshold, 10);
  REQUIRE(pts.size() == 10);
  CHECK(pts.front() == 65537);
  for (const auto& p : pts) CHECK(certify_c1_boundary(L, p) == Certified::yes);
  // Below C^4 the square-root credit is too small.
  CHECK(certify_c1_boundary(L, 13) == Certified::no);
}

TEST_CASE("c1 with a huge threshold uses the Chebyshev product") {
  AmbientDatumSpec s;
  s.factors = {{RootDatumSpec{Family::A, 2}, 1}};
  s.rep_dim = 3;
  s.bad_prime_ceiling = 5;
  const auto L = assemble_ledger(s);
  const C1Delta cd = synthesize_c1_delta(L);
  CHECK(cd.chebyshev_product);
  CHECK(cd.threshold > pow2(200));
  // log2 c1 = log2(floor / (B c2)) - T (log2 C + 1/2) exactly up to rounding.
  const Rational t{cd.threshold};
  const Magnitude head = mag_div(mag_div(L.magnitude("prasad_floor"), L.magnitude("B")), L.magnitude("c2"));
  CHECK(cd.c1.log2_high() <= head.log2_high() - t * Rational(5, 2));
  for (const auto& p : boundary_points(cd.threshold, 10)) CHECK(certify_c1_boundary(L, p) == Certified::yes);
}

TEST_CASE("a tight c1 boundary is indeterminate at low precision") {
  // T = ceil((C / c4)^(4/3)) = ceil(2^(44/3)); the first prime above it
  // clears p^(3/4) >= 2^11 by about 5e-4 in log2.
  ConstantsLedger L = reference();
  L.set("c3", Integer(2), "lemma:new66", "toy");
  L.set("c5", Magnitude::power_of_two(1), "lemma:new67", "toy");
  CHECK(certify_c1_boundary(L, 26017, 8) == Certified::indeterminate);
  CHECK(certify_c1_boundary(L, 26017, 64) == Certified::yes);
  const C1Delta cd = synthesize_c1_delta(L, 64);
  CHECK(cd.threshold == 26008);
}

TEST_CASE("degree_lower_bound") {
  const auto& L = reference();
  auto d = a1_subgroup();
  const Magnitude c1 = L.magnitude("c1");
  CHECK(degree_lower_bound(L, d) == c1);

  d.sigma_V = {2, 3};
  const Magnitude got = degree_lower_bound(L, d);
  mpfr_t v, t;
  mpfr_inits2(512, v, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(t, 6, MPFR_RNDN);
  mpfr_log2(t, t, MPFR_RNDN);
  mpfr_div_ui(t, t, 4, MPFR_RNDN);
  mpfr_set_q(v, c1.log2_low().get_mpq_t(), MPFR_RNDN);
  mpfr_add(v, v, t, MPFR_RNDN);
  CHECK(encloses(got, v));
  mpfr_clears(v, t, static_cast<mpfr_ptr>(nullptr));
}

TEST_CASE("best_lower_bound") {
  const auto& L = reference();
  auto d = a1_subgroup();
  // With few bad primes the volume term wins.
  CHECK(best_lower_bound(L, d) == mag_max(L.magnitude("c1"), volume_lower_bound(L, d)));
  CHECK(certify_less(degree_lower_bound(L, d), best_lower_bound(L, d)) == Certified::yes);
  // With many bad primes the Hecke term c1 Pi_V^(1/4) wins.
  const auto primes = sieve_primes(100000).primes;
  d.sigma_V = std::set<std::uint64_t>(primes.begin(), primes.end());
  CHECK(best_lower_bound(L, d) == degree_lower_bound(L, d));
}

TEST_CASE("degree_lower_bound is monotone in sigma_V") {
  const auto& L = reference();
  auto d = a1_subgroup();
  const auto primes = sieve_primes(200).primes;
  Magnitude prev = Magnitude::power_of_two(-1000000);
  for (std::size_t i = 0; i < 20; ++i) {
    d.sigma_V.insert(primes[i]);
    const Magnitude cur = degree_lower_bound(L, d);
    CHECK(certify_less(cur, prev) != Certified::yes);
    prev = cur;
  }
}

TEST_CASE("iteration_step") {
  const auto L = toy(1, 2);
  mpfr_t v;
  mpfr_init2(v, 512);
  mpfr_set_ui(v, 144, MPFR_RNDN);
  mpfr_log2(v, v, MPFR_RNDN);
  const Magnitude s = iteration_step(L, Magnitude::from_integer(3), 2);
  CHECK(encloses(s, v));
  CHECK(s.width() < Rational(1, 1000000));
  mpfr_set_ui(v, 625, MPFR_RNDN);
  mpfr_log2(v, v, MPFR_RNDN);
  CHECK(encloses(iteration_step(L, Magnitude(), 5), v));
  mpfr_clear(v);
  const auto& R = reference();
  const Magnitude a = iteration_step(R, Magnitude::from_integer(7), 3);
  const Magnitude b = iteration_step(R, Magnitude::from_integer(14), 3);
  CHECK(b.log2_high() - a.log2_high() <= 2 + Rational(1, 1000000));
  CHECK(b.log2_high() - a.log2_high() >= 2 - Rational(1, 1000000));
}

TEST_CASE("admissible_prime_ceiling") {
  const auto& L = reference();
  const Magnitude c1 = L.magnitude("c1");
  // x = c1: log term vanishes, P = (2 (N + 1))^(4/3) = 6^(4/3) for N = 2.
  const Magnitude at_c1 = admissible_prime_ceiling(L, c1, 2);
  mpfr_t v;
  mpfr_init2(v, 512);
  mpfr_set_ui(v, 6, MPFR_RNDN);
  mpfr_log2(v, v, MPFR_RNDN);
  mpfr_mul_ui(v, v, 4, MPFR_RNDN);
  mpfr_div_ui(v, v, 3, MPFR_RNDN);
  CHECK(encloses(at_c1, v));

  // Toy: c1 = 1, delta = 1/4, N = 2, x = 2: Q = 1 / (1/4) + 3 = 7, P = 14^(4/3).
  ConstantsLedger T = reference();
  T.set("c1", Magnitude(), "theorem:mainbound", "toy");
  const Magnitude p = admissible_prime_ceiling(T, Magnitude::from_integer(2), 2);
  mpfr_set_ui(v, 14, MPFR_RNDN);
  mpfr_log2(v, v, MPFR_RNDN);
  mpfr_mul_ui(v, v, 4, MPFR_RNDN);
  mpfr_div_ui(v, v, 3, MPFR_RNDN);
  CHECK(encloses(p, v));
  mpfr_clear(v);

  // Nondecreasing in x and N.
  Magnitude prev = admissible_prime_ceiling(L, Magnitude::power_of_two(1), 2);
  for (int e = 2; e < 200000; e *= 3) {
    const Magnitude cur = admissible_prime_ceiling(L, Magnitude::power_of_two(e), 2);
    CHECK(certify_less(cur, prev) != Certified::yes);
    prev = cur;
  }
  CHECK(certify_less(admissible_prime_ceiling(L, Magnitude::power_of_two(10), 2),
                     admissible_prime_ceiling(L, Magnitude::power_of_two(10), 3)) == Certified::yes);
}

TEST_CASE("final_degree_bound clamp") {
  const auto& L = reference();
  const auto a = final_degree_bound(L, {2, 5}, 2);
  REQUIRE(a.exact);
  CHECK(*a.exact == 5);
  const auto b = final_degree_bound(L, {1, 7}, 2);
  REQUIRE(b.exact);
  CHECK(*b.exact == 7);
  CHECK_THROWS_AS(final_degree_bound(L, {0, 7}, 2), DomainError);
  CHECK_THROWS_AS(final_degree_bound(L, {3, 0}, 2), DomainError);
}

TEST_CASE("final_degree_bound post-checks and closure beyond x0") {
  for (const auto& L : {toy(1, 2), reference()}) {
    const SubvarietyProblem pb{3, 1};
    const auto fb = final_degree_bound(L, pb, 2);
    REQUIRE(fb.log2_x0);
    CHECK(fb.below_at_x0 == Certified::yes);
    CHECK(fb.below_at_2x0 == Certified::yes);
    CHECK(fb.slope_below_one == Certified::yes);
    const Integer m = *fb.log2_x0;
    // Independent re-evaluation.
    CHECK(certify_less(cutting_bound(L, pb, 2, fb.x0), fb.x0) == Certified::yes);
    // Off-grid and far points above x0.
    for (long k : {1L, 2L, 3L, 17L, 1000L, 1000000L}) {
      const Magnitude x = mag_mul(Magnitude::power_of_two(Rational(m + k)), Magnitude::from_integer(3));
      CHECK(certify_less(cutting_bound(L, pb, 2, x), x) == Certified::yes);
    }
    // The grid point just below x0 fails.
    if (m > 1) {
      const Magnitude below = Magnitude::power_of_two(Rational(m - 1));
      const bool fails = certify_less(cutting_bound(L, pb, 2, below), below) != Certified::yes ||
                         certify_slope_below_one(L, pb, 2, m - 1) != Certified::yes;
      CHECK(fails);
    }
  }
}

TEST_CASE("final_degree_bound is monotone in deg_Z and dim_Z") {
  const auto& L = reference();
  std::vector<std::vector<Integer>> grid;
  for (long dim = 2; dim <= 6; ++dim) {
    std::vector<Integer> row;
    for (long deg : {1L, 2L, 10L, 100L}) {
      const auto fb = final_degree_bound(L, {dim, deg}, 2);
      row.push_back(fb.exact ? Integer(bit_length(*fb.exact)) : *fb.log2_x0);
    }
    grid.push_back(row);
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      if (j + 1 < grid[i].size()) CHECK(grid[i][j] <= grid[i][j + 1]);
      if (i + 1 < grid.size()) CHECK(grid[i][j] <= grid[i + 1][j]);
    }
}

TEST_CASE("overflow guard") {
  FinalBoundOptions o;
  o.max_log2 = 100;
  CHECK_THROWS_WITH_AS(final_degree_bound(reference(), {3, 1}, 2, o), doctest::Contains("ledger.k=int:2053"),
                       OverflowError);
  o.max_log2 = 53214;
  CHECK(*final_degree_bound(reference(), {3, 1}, 2, o).log2_x0 == 53214);
}

TEST_CASE("subgroup validation") {
  auto d = a1_subgroup();
  CHECK_NOTHROW(validate(d, 1));
  d.factors = {{RootDatumSpec{Family::A, 2}, 1}};
  CHECK_THROWS_AS(validate(d, 1), DomainError);
  d = a1_subgroup();
  d.sigma_V = {4};
  CHECK_THROWS_AS(validate(d, 1), DomainError);
  d = a1_subgroup();
  d.index_lower = 0;
  CHECK_THROWS_AS(validate(d, 1), DomainError);
}
