#include "aobound/verify.hpp"

#include "aobound/constants.hpp"
#include "aobound/lattice.hpp"
#include "aobound/primes.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace aobound {

bool VerifySummary::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

namespace {

// Classical values, typed in independently of rootsys.
Integer classical_center(const RootDatumSpec& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::E: return t.rank == 6 ? 3 : t.rank == 7 ? 2 : 1;
    default: return 1;
  }
}

Integer classical_weyl(const RootDatumSpec& t) {
  const unsigned long r = t.rank;
  switch (t.family) {
    case Family::A: return factorial(r + 1);
    case Family::B:
    case Family::C: return pow2(r) * factorial(r);
    case Family::D: return pow2(r - 1) * factorial(r);
    case Family::E: return t.rank == 6 ? Integer(51840) : t.rank == 7 ? Integer(2903040) : Integer(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

long classical_dim(const RootDatumSpec& t) {
  const long r = t.rank;
  switch (t.family) {
    case Family::A: return r * r + 2 * r;
    case Family::B:
    case Family::C: return 2 * r * r + r;
    case Family::D: return 2 * r * r - r;
    case Family::E: return r == 6 ? 78 : r == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }
  void fail(const std::string& detail) {
    if (result_.passed) result_.detail = detail;
    result_.passed = false;
  }
  void expect(bool ok, const std::string& detail) {
    if (!ok) fail(detail);
  }
  InvariantResult done() { return result_; }

 private:
  InvariantResult result_;
};

void root_data(int max_rank, const VerifyProviders& pv, std::vector<InvariantResult>& out) {
  Checker det_c("det_cartan_identity");
  Checker exp_c("exponent_sum");
  Checker weyl_c("weyl_order_product");
  Checker roots_c("positive_root_count");
  Checker triv_c("trivial_weight_dimension");
  for (const auto& t : irreducible_types_up_to_rank(max_rank)) {
    const std::string n = t.name();
    const Integer d = det(cartan_matrix(t));
    const Integer z = pv.center_order(t);
    const auto diag = smith_diagonal(snf(cartan_matrix(t)));
    const Integer snf_prod = std::accumulate(diag.begin(), diag.end(), Integer(1),
                                             [](const Integer& a, const Integer& b) { return Integer(a * b); });
    det_c.expect(d == z && z == classical_center(t) && snf_prod == z,
                 "det-Cartan identity fails for " + n + ": det " + to_string(d) + ", center order " +
                     to_string(z) + ", classical " + to_string(classical_center(t)) + ", SNF product " +
                     to_string(snf_prod));

    const long npos = static_cast<long>(positive_roots(t).size());
    const auto ex = pv.exponents(t);
    const long sum = std::accumulate(ex.begin(), ex.end(), 0L);
    exp_c.expect(sum == npos, "sum of exponents " + std::to_string(sum) + " != |Phi+| " +
                                  std::to_string(npos) + " for " + n);

    Integer prod = 1;
    for (int m : ex) prod *= m + 1;
    const Integer w = pv.weyl_order(t);
    weyl_c.expect(prod == w && w == classical_weyl(t),
                  "prod(m+1) " + to_string(prod) + ", |W| " + to_string(w) + ", classical " +
                      to_string(classical_weyl(t)) + " for " + n);

    roots_c.expect(2 * npos == classical_dim(t) - t.rank,
                   "|Phi+| " + std::to_string(npos) + " != (dim - rank)/2 for " + n);

    triv_c.expect(weyl_dim(t, WeightVector(t.rank, 0)) == 1, "weyl_dim(0) != 1 for " + n);
  }
  for (Checker* c : {&det_c, &exp_c, &weyl_c, &roots_c, &triv_c}) out.push_back(c->done());
}

// gcd of all k x k minors, k = 1..min(rows, cols).
std::vector<Integer> minor_gcds(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols(), n = std::min(r, c);
  std::vector<Integer> g(n, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        IntMatrix sub(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        mpz_gcd(g[k - 1].get_mpz_t(), g[k - 1].get_mpz_t(), det(sub).get_mpz_t());
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return g;
}

bool is_unimodular(const IntMatrix& u) {
  const Integer d = det(u);
  return d == 1 || d == -1;
}

void normal_forms(int count, std::vector<InvariantResult>& out) {
  Checker h_c("hnf_postconditions");
  Checker s_c("snf_postconditions");
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<long> entry(-100, 100);
  for (int trial = 0; trial < count; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    IntMatrix m(r, c);
    // Every fourth matrix has rank one, to exercise zero rows and columns.
    const bool low_rank = trial % 4 == 3;
    std::uniform_int_distribution<long> scale(-1, 1);
    for (std::size_t i = 0; i < r; ++i) {
      const long k = scale(rng);
      for (std::size_t j = 0; j < c; ++j)
        m(i, j) = low_rank && i > 0 ? Integer(m(0, j) * k) : Integer(entry(rng));
    }
    const std::string tag = "matrix #" + std::to_string(trial);

    const auto h = hnf(m);
    h_c.expect(h.u * m == h.h, tag + ": u*m != h");
    h_c.expect(is_unimodular(h.u), tag + ": hnf transform not unimodular");
    h_c.expect(is_hermite_normal(h.h), tag + ": hnf shape");

    const auto s = snf(m);
    s_c.expect(s.u * m * s.v == s.s, tag + ": u*m*v != s");
    s_c.expect(is_unimodular(s.u) && is_unimodular(s.v), tag + ": snf transform not unimodular");
    const auto d = smith_diagonal(s);
    bool shape = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j && s.s(i, j) != 0) shape = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) shape = false;
      if (i + 1 < d.size() && d[i] != 0 && d[i + 1] % d[i] != 0) shape = false;
      if (i + 1 < d.size() && d[i] == 0 && d[i + 1] != 0) shape = false;
    }
    s_c.expect(shape, tag + ": snf not a divisibility-chain diagonal");
    if (r <= 5 && c <= 5) {
      const auto g = minor_gcds(m);
      for (std::size_t k = 0; k < g.size(); ++k) {
        const Integer expect = g[k] == 0 ? Integer(0) : k == 0 ? g[0] : Integer(g[k] / g[k - 1]);
        s_c.expect(d[k] == expect, tag + ": d_" + std::to_string(k + 1) + " = " + to_string(d[k]) +
                                       ", minor gcd ratio " + to_string(expect));
      }
    }
  }
  out.push_back(h_c.done());
  out.push_back(s_c.done());
}

void density(std::uint64_t limit, std::vector<InvariantResult>& out) {
  Checker c("prime_density");
  const auto res = check_prime_density(kPrimeDensityEpsilon, kPrimeDensityConstant, limit);
  c.expect(res.holds, "pi(x) <= x^(3/4)/2 at x = " +
                          (res.first_failure ? std::to_string(*res.first_failure) : std::string("?")));
  out.push_back(c.done());
}

void ledgers(std::vector<InvariantResult>& out) {
  Checker c("ledger_self_consistency");
  AmbientDatumSpec ref;
  ref.factors = {{RootDatumSpec{Family::A, 1}, 1}};
  AmbientDatumSpec a2;
  a2.factors = {{RootDatumSpec{Family::A, 2}, 1}};
  a2.rep_dim = 3;
  a2.bad_prime_ceiling = 5;
  a2.declared_sigma = {2, 3};
  for (const auto& spec : {ref, a2}) {
    const auto L = assemble_ledger(spec);
    const std::string n = spec.factors.front().type.name();
    for (const auto& name : ledger_entry_names()) c.expect(L.contains(name), n + ": missing " + name);
    for (const auto& e : L.entries())
      c.expect(known_provenances().count(e.provenance) == 1, n + ": unknown provenance " + e.provenance);
    c.expect(L.integer("k") == L.integer("kprime") + L.integer("f"), n + ": k != kprime + f");
    const Magnitude c5 = L.magnitude("c5");
    c.expect(certify_less_equal(L.magnitude("c3"), c5) == Certified::yes, n + ": c5 < c3");
    const Integer B = L.integer("B");
    const Integer b = L.integer("b");
    const Magnitude cover = mag_div(mag_pow(Magnitude::from_integer(B), Rational(2 * b + 2)), L.magnitude("c4"));
    c.expect(certify_less_equal(cover, c5) != Certified::no, n + ": c5 < c4^-1 B^(2b+2)");
    c.expect(L.rational("delta") > 0 && L.rational("delta") <= Rational(1, 2), n + ": delta out of (0, 1/2]");
    c.expect(parse_ledger(serialize_ledger(L, "ledger."), "ledger.") == L, n + ": serialization round trip");
    for (const auto& p : boundary_points(L.integer("c1_threshold"), 10))
      c.expect(certify_c1_boundary(L, p) == Certified::yes, n + ": c1 boundary at " + to_string(p));
  }
  out.push_back(c.done());
}

void minkowski(const VerifyProviders& pv, std::vector<InvariantResult>& out) {
  Checker c("minkowski_values");
  const long expect[] = {2, 24, 48, 5760, 11520, 2903040};
  for (long r = 1; r <= 6; ++r) {
    const Integer got = pv.minkowski_bound(r);
    c.expect(got == expect[r - 1], "M(" + std::to_string(r) + ") = " + to_string(got) + ", expected " +
                                       std::to_string(expect[r - 1]));
  }
  out.push_back(c.done());
}

}  // namespace

VerifySummary verify(VerifyLevel level, const VerifyProviders& providers) {
  VerifySummary s;
  if (level == VerifyLevel::none) return s;
  const bool full = level == VerifyLevel::full;
  root_data(full ? 8 : 4, providers, s.results);
  normal_forms(full ? 1000 : 100, s.results);
  density(full ? 1000000 : 100000, s.results);
  ledgers(s.results);
  minkowski(providers, s.results);
  return s;
}

std::string format_summary(const VerifySummary& summary) {
  std::ostringstream os;
  for (const auto& r : summary.results) {
    os << r.name << ": " << (r.passed ? "ok" : "FAIL");
    if (!r.passed) os << " (" << r.detail << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace aobound
