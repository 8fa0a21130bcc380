#include "aobound/constants.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace aobound;

namespace {

AmbientDatumSpec single(Family f, int rank, int degree = 1, long n = 2, std::uint64_t N = 2) {
  AmbientDatumSpec s;
  s.factors = {{RootDatumSpec{f, rank}, degree}};
  s.rep_dim = n;
  s.bad_prime_ceiling = N;
  return s;
}

}  // namespace

TEST_CASE("rank_and_dim") {
  CHECK(rank_and_dim(single(Family::A, 1)).rank == 1);
  CHECK(rank_and_dim(single(Family::A, 1)).dim == 3);
  CHECK(rank_and_dim(single(Family::C, 2)).dim == 10);
  const auto d = rank_and_dim(single(Family::A, 1, 2));
  CHECK(d.rank == 2);
  CHECK(d.dim == 6);
}

TEST_CASE("bound_B is the partition maximum") {
  for (long r = 1; r <= 12; ++r) CHECK(bound_B(r) == oracle::partition_max(r));
  CHECK(bound_B(3) == 8);
  CHECK(bound_B(4) == 16);
  CHECK_THROWS_AS(bound_B(0), DomainError);
}

TEST_CASE("minkowski_bound by hand-evaluated product formula") {
  // 2^1; 2^3 3; 2^4 3; 2^7 3^2 5; 2^8 3^2 5; 2^10 3^4 5 7
  CHECK(minkowski_bound(1) == 2);
  CHECK(minkowski_bound(2) == 24);
  CHECK(minkowski_bound(3) == 48);
  CHECK(minkowski_bound(4) == 5760);
  CHECK(minkowski_bound(5) == 11520);
  CHECK(minkowski_bound(6) == 2903040);
  CHECK_THROWS_AS(minkowski_bound(0), DomainError);
  for (long r = 1; r < 12; ++r) CHECK(minkowski_bound(r + 1) % minkowski_bound(r) == 0);
}

TEST_CASE("bound_D examples") {
  CHECK(bound_D(1, 2) == 4);
  CHECK(bound_D(1, 1) == 2);
  // r = 2, n = 3: A1 weights {0,1,2} give ceil(1/2 * 2) + 1 = 2; A2 gives
  // ceil(2/3 * 1) + 1 = 2; B2, C2, G2 have no non-trivial weight of dim <= 3.
  CHECK(bound_D(2, 3) == 4 * 2 * 2);
  CHECK_THROWS_AS(bound_D(1, 1000, 10), CapExceeded);
}

TEST_CASE("bound_D is monotone in n") {
  for (long r = 1; r <= 3; ++r) {
    Integer prev = 0;
    for (long n = 2; n <= 30; ++n) {
      const Integer d = bound_D(r, n);
      CHECK(d >= prev);
      prev = d;
    }
  }
}

TEST_CASE("subgroup maxima agree with exhaustive multiset enumeration") {
  for (long r = 1; r <= 3; ++r)
    for (long dim : {3L, 6L, 8L, 10L, 14L, 15L, 21L, 30L}) {
      CAPTURE(r);
      CAPTURE(dim);
      const auto got = subgroup_maxima(r, dim);
      const auto want = oracle::multiset_maxima(r, dim);
      CHECK(got.weyl_order == want.weyl);
      CHECK(got.positive_roots == want.roots);
    }
  CHECK(subgroup_maxima(1, 3).local_mark == 2);
  CHECK(subgroup_maxima(2, 14).local_mark == 6);  // G2 highest root 3a1 + 2a2
  CHECK(subgroup_maxima(8, 248).local_mark == 12);
}

TEST_CASE("reference ledger values") {
  const auto L = assemble_ledger(single(Family::A, 1));
  CHECK(L.integer("r_G") == 1);
  CHECK(L.integer("dim_G") == 3);
  CHECK(L.integer("B") == 2);
  CHECK(L.integer("b") == 2);
  CHECK(L.integer("A") == 2);
  CHECK(L.integer("C") == 2);
  CHECK(L.integer("D") == 4);
  CHECK(L.integer("D_sp") == 64);
  CHECK(L.integer("weyl_order_max") == 2);
  CHECK(L.integer("pos_roots_max") == 1);
  CHECK(L.integer("local_mark_max") == 2);
  CHECK(L.integer("f") == 5);  // 2 * 1 + ceil(log2 4) + 1
  CHECK(L.integer("kprime") == 2048);
  CHECK(L.integer("k") == 2053);
  CHECK(L.integer("pi0_bound") == 8);
  CHECK(L.magnitude("c4") == Magnitude::power_of_two(-10));
  CHECK(L.integer("c3") == 2);
  CHECK(L.magnitude("c5") == Magnitude::power_of_two(16));
  CHECK(L.integer("d_cmp") == 1);
  CHECK(L.integer("c1_threshold") == 65536);
  CHECK(L.rational("delta") == Rational(1, 4));
  // log2 c2 = 7 + 2 ln 2
  const Magnitude c2 = L.magnitude("c2");
  CHECK(c2.log2_low() < Rational(83862943612, 10000000000));
  CHECK(c2.log2_high() > Rational(83862943611, 10000000000));
}

TEST_CASE("ledger structure and provenance") {
  for (const auto& spec : {single(Family::A, 1), single(Family::A, 2, 1, 3, 5), single(Family::G, 2, 1, 7, 11),
                           single(Family::B, 3, 1, 8, 3)}) {
    const auto L = assemble_ledger(spec);
    std::vector<std::string> names;
    for (const auto& e : L.entries()) {
      names.push_back(e.name);
      CHECK(known_provenances().count(e.provenance) == 1);
      CHECK_FALSE(e.formula.empty());
      if (const auto* m = std::get_if<Magnitude>(&e.value)) CHECK(m->log2_low() <= m->log2_high());
    }
    CHECK(names == ledger_entry_names());
    CHECK(L.integer("k") - L.integer("kprime") == L.integer("f"));
    const Magnitude c5 = L.magnitude("c5");
    CHECK(certify_less_equal(L.magnitude("c3"), c5) == Certified::yes);
    const Magnitude cover = mag_div(mag_pow(L.magnitude("B"), Rational(2 * L.integer("b") + 2)), L.magnitude("c4"));
    CHECK(certify_less(c5, cover) != Certified::yes);
    const Rational poly{L.integer("b") * L.integer("b") + L.integer("b") + 1};
    CHECK(L.magnitude("c2").log2_low() >= poly * L.integer("r_G"));
    CHECK(L.integer("c1_threshold") >= ipow(L.integer("C"), 4));
  }
}

TEST_CASE("ledger determinism and serialization round trip") {
  const auto spec = single(Family::A, 2, 1, 3, 5);
  const auto a = assemble_ledger(spec);
  const auto b = assemble_ledger(spec);
  CHECK(a == b);
  CHECK(serialize_ledger(a, "x.") == serialize_ledger(b, "x."));
  const auto back = parse_ledger(serialize_ledger(a, "ledger."), "ledger.");
  CHECK(back == a);
  CHECK(serialize_ledger(back, "") == serialize_ledger(a, ""));
}

TEST_CASE("ledger monotonicity") {
  Integer prev_D = 0, prev_Dsp = 0, prev_kp = 0, prev_k = 0;
  for (long n = 2; n <= 6; ++n) {
    const auto L = assemble_ledger(single(Family::A, 1, 1, n));
    CHECK(L.integer("D") >= prev_D);
    CHECK(L.integer("D_sp") >= prev_Dsp);
    CHECK(L.integer("kprime") >= prev_kp);
    CHECK(L.integer("k") >= prev_k);
    prev_D = L.integer("D");
    prev_Dsp = L.integer("D_sp");
    prev_kp = L.integer("kprime");
    prev_k = L.integer("k");
  }
  Integer pB = 0, pb = 0, pA = 0;
  for (int r = 1; r <= 3; ++r) {
    const auto L = assemble_ledger(single(Family::A, r));
    CHECK(L.integer("B") >= pB);
    CHECK(L.integer("b") >= pb);
    CHECK(L.integer("A") >= pA);
    pB = L.integer("B");
    pb = L.integer("b");
    pA = L.integer("A");
  }
}

TEST_CASE("ambient validation") {
  AmbientDatumSpec s = single(Family::A, 1);
  s.bad_prime_ceiling = 5;
  s.declared_sigma = {2, 3};
  CHECK_NOTHROW(validate(s));
  s.declared_sigma = {5};
  CHECK_THROWS_AS(validate(s), DomainError);
  s.declared_sigma = {4};
  CHECK_THROWS_AS(validate(s), DomainError);
  CHECK_THROWS_AS(validate(AmbientDatumSpec{}), DomainError);
  CHECK_THROWS_AS(validate(single(Family::A, 1, 1, 1)), DomainError);
  CHECK_THROWS_AS(validate(single(Family::A, 13)), DomainError);
  CHECK_THROWS_AS(validate(single(Family::A, 1, 0)), DomainError);
}

TEST_CASE("ledger accessors reject wrong kinds") {
  const auto L = assemble_ledger(single(Family::A, 1));
  CHECK_THROWS_AS(L.integer("c2"), DomainError);
  CHECK_THROWS_AS(L.rational("B"), DomainError);
  CHECK_THROWS_AS(L.entry("nope"), DomainError);
  CHECK(L.magnitude("B") == Magnitude::power_of_two(1));
}
