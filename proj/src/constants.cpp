#include "aobound/constants.hpp"

#include "aobound/bounds.hpp"
#include "aobound/primes.hpp"

#include <algorithm>
#include <sstream>

namespace aobound {

void validate(const AmbientDatumSpec& spec) {
  if (spec.factors.empty()) throw DomainError("ambient: at least one factor is required");
  for (const auto& f : spec.factors) {
    validate(f.type);
    if (f.degree < 1) throw DomainError("ambient factor " + f.type.name() + ": degree must be >= 1");
  }
  if (spec.rep_dim < 2) throw DomainError("ambient: rep_dim must be >= 2");
  if (spec.bad_prime_ceiling < 2) throw DomainError("ambient: bad_prime_ceiling must be >= 2");
  for (std::uint64_t p : spec.declared_sigma) {
    if (!is_prime_u64(p)) throw DomainError("ambient: declared_sigma entry " + std::to_string(p) + " is not prime");
    if (p >= spec.bad_prime_ceiling)
      throw DomainError("ambient: declared_sigma entry " + std::to_string(p) +
                        " is not below bad_prime_ceiling");
  }
  if (rank_and_dim(spec).rank > kMaxAmbientRank)
    throw DomainError("ambient: total rank exceeds " + std::to_string(kMaxAmbientRank));
}

RankAndDim rank_and_dim(const AmbientDatumSpec& spec) {
  RankAndDim out;
  for (const auto& f : spec.factors) {
    out.rank += static_cast<long>(f.degree) * f.type.rank;
    out.dim += static_cast<long>(f.degree) * split_dimension(f.type);
  }
  return out;
}

Integer bound_B(long total_rank) {
  if (total_rank < 1) throw DomainError("bound_B: rank must be >= 1");
  return pow2(static_cast<unsigned long>(total_rank));
}

Integer bound_B(const AmbientDatumSpec& spec) { return bound_B(rank_and_dim(spec).rank); }

Integer minkowski_bound(long r) {
  if (r < 1) throw DomainError("minkowski_bound: r must be >= 1");
  Integer m = 1;
  for (std::uint64_t p : sieve_primes(static_cast<std::uint64_t>(r) + 1).primes) {
    unsigned long e = 0;
    Integer step = p - 1;  // p^k (p - 1)
    for (;;) {
      const Integer term = Integer(r) / step;
      if (term == 0) break;
      e += term.get_ui();
      step *= p;
    }
    m *= ipow(Integer(p), e);
  }
  return m;
}

Integer bound_D(long total_rank, long rep_dim, long weight_cap) {
  Integer best = 0;
  for (const auto& type : irreducible_types_up_to_rank(static_cast<int>(total_rank))) {
    const RatMatrix inv = inverse_cartan(type);
    Rational max_entry = 0;
    for (std::size_t i = 0; i < inv.rows(); ++i)
      for (std::size_t j = 0; j < inv.cols(); ++j) max_entry = std::max(max_entry, Rational(inv(i, j)));
    long max_coord = 0;
    for (const auto& w : dominant_weights_up_to_dim(type, Integer(rep_dim), weight_cap))
      for (long x : w) max_coord = std::max(max_coord, x);
    const Integer bracket = ceil_of(max_entry * max_coord) + 1;
    best = std::max(best, bracket);
  }
  return bound_B(total_rank) * total_rank * best;
}

Integer bound_D(const AmbientDatumSpec& spec, long weight_cap) {
  return bound_D(rank_and_dim(spec).rank, spec.rep_dim, weight_cap);
}

SubgroupMaxima subgroup_maxima(long total_rank, long total_dim) {
  struct Item {
    long rank;
    long dim;
    Integer weyl;
    long roots;
  };
  std::vector<Item> items;
  SubgroupMaxima out;
  out.weyl_order = 1;
  for (const auto& t : irreducible_types_up_to_rank(static_cast<int>(total_rank))) {
    const long dim = split_dimension(t);
    if (dim > total_dim) continue;
    const long roots = (dim - t.rank) / 2;
    items.push_back({t.rank, dim, weyl_order(t), roots});
    const auto marks = highest_root_marks(t);
    out.local_mark = std::max(out.local_mark, 2L * *std::max_element(marks.begin(), marks.end()));
  }
  // Unbounded knapsack over (rank, dim) capacities; products for |W|, sums
  // for |Phi+|.
  const std::size_t R = total_rank + 1;
  const std::size_t Dm = total_dim + 1;
  std::vector<Integer> weyl(R * Dm, Integer(1));
  std::vector<long> roots(R * Dm, 0);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t d = 0; d < Dm; ++d)
      for (const Item& it : items) {
        if (static_cast<long>(r) < it.rank || static_cast<long>(d) < it.dim) continue;
        const std::size_t prev = (r - it.rank) * Dm + (d - it.dim);
        const Integer w = weyl[prev] * it.weyl;
        if (w > weyl[r * Dm + d]) weyl[r * Dm + d] = w;
        roots[r * Dm + d] = std::max(roots[r * Dm + d], roots[prev] + it.roots);
      }
  out.weyl_order = weyl.back();
  out.positive_roots = roots.back();
  return out;
}

void ConstantsLedger::set(std::string name, LedgerValue value, std::string provenance,
                          std::string formula) {
  for (auto& e : entries_) {
    if (e.name == name) {
      e.value = std::move(value);
      e.provenance = std::move(provenance);
      e.formula = std::move(formula);
      return;
    }
  }
  entries_.push_back({std::move(name), std::move(value), std::move(provenance), std::move(formula)});
}

bool ConstantsLedger::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.name == name; });
}

const LedgerEntry& ConstantsLedger::entry(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw DomainError("ledger has no entry '" + std::string(name) + "'");
}

const Integer& ConstantsLedger::integer(std::string_view name) const {
  const auto& e = entry(name);
  if (const auto* v = std::get_if<Integer>(&e.value)) return *v;
  throw DomainError("ledger entry '" + std::string(name) + "' is not an integer");
}

const Rational& ConstantsLedger::rational(std::string_view name) const {
  const auto& e = entry(name);
  if (const auto* v = std::get_if<Rational>(&e.value)) return *v;
  throw DomainError("ledger entry '" + std::string(name) + "' is not a rational");
}

Magnitude ConstantsLedger::magnitude(std::string_view name, unsigned bits) const {
  const auto& e = entry(name);
  if (const auto* m = std::get_if<Magnitude>(&e.value)) return *m;
  if (const auto* i = std::get_if<Integer>(&e.value)) return Magnitude::from_integer(*i, bits);
  return Magnitude::from_rational(std::get<Rational>(e.value), bits);
}

bool operator==(const ConstantsLedger& a, const ConstantsLedger& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.name != y.name || x.provenance != y.provenance || x.formula != y.formula ||
        !(x.value == y.value))
      return false;
  }
  return true;
}

const std::vector<std::string>& ledger_entry_names() {
  static const std::vector<std::string> names = {
      "r_G", "dim_G", "B", "b", "A", "c2", "C", "D", "D_sp",
      "weyl_order_max", "pos_roots_max", "local_mark_max", "f", "kprime", "k",
      "pi0_bound", "c4", "c3", "c5", "d_cmp", "prasad_floor",
      "c1_threshold", "c1", "delta"};
  return names;
}

const std::set<std::string>& known_provenances() {
  static const std::set<std::string> tags = {
      "lemma:modZ", "lemma:degF", "lemma:C-to-power", "lemma:inc",
      "lemma:char", "lemma:split-char", "lemma:new66", "lemma:new67",
      "lemma:lowerbound", "theorem:hecke", "theorem:mainbound",
      "theorem:maintheorem", "prasad-factor", "eqn-mid"};
  return tags;
}

namespace {

Integer ceil_sqrt(const Integer& x) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
  return s * s < x ? s + 1 : s;
}

// ceil(log2 x) for x >= 1.
unsigned long ceil_log2(const Integer& x) {
  return x <= 1 ? 0 : static_cast<unsigned long>(bit_length(x - 1));
}

}  // namespace

ConstantsLedger assemble_ledger(const AmbientDatumSpec& spec, const AssembleOptions& options) {
  validate(spec);
  const unsigned bits = options.precision_bits;
  ConstantsLedger L;
  const RankAndDim rd = rank_and_dim(spec);
  const long r = rd.rank;

  L.set("r_G", Integer(r), "theorem:hecke", "sum of degree * rank over factors");
  L.set("dim_G", Integer(rd.dim), "prasad-factor", "sum of degree * dim(split form) over factors");

  const Integer B = bound_B(r);
  L.set("B", B, "lemma:modZ", "2^r_G = max prod(r_i + 1) over rank splittings");

  const Integer b = minkowski_bound(r);
  L.set("b", b, "lemma:degF", "Minkowski bound M(r_G)");

  L.set("A", factorial(B.get_ui()), "lemma:inc", "B!");

  // log2 c2 = r_G (b^2 + b + 1 + 2 ln B), ln B = r_G ln 2.
  {
    const Bracket ln2 = ln2_bracket(bits);
    const Rational poly{b * b + b + 1};
    const Rational rr{Integer(r)};
    const Magnitude c2 = Magnitude::from_log2(rr * (poly + 2 * rr * ln2.low),
                                              rr * (poly + 2 * rr * ln2.high), bits);
    L.set("c2", c2, "lemma:C-to-power", "B^(b^2 + b + 1 + 2 ln B), natural log");
  }
  L.set("C", B, "lemma:C-to-power", "B");

  const Integer D = bound_D(r, spec.rep_dim, options.weight_cap);
  L.set("D", D, "lemma:char",
        "B * r_G * max_T (ceil(max entry of A_T^-1 * max weight coordinate) + 1)");

  const Integer D_sp = Integer(r) * ipow(b, 2 * r) * D * D;
  L.set("D_sp", D_sp, "lemma:split-char", "r_G * b^(2 r_G) * D^2");

  const SubgroupMaxima mx = subgroup_maxima(r, rd.dim);
  L.set("weyl_order_max", mx.weyl_order, "theorem:hecke",
        "max |W| over types with rank <= r_G and dim <= dim_G");
  L.set("pos_roots_max", Integer(mx.positive_roots), "theorem:hecke",
        "max |Phi+| over types with rank <= r_G and dim <= dim_G");
  L.set("local_mark_max", Integer(mx.local_mark), "theorem:hecke",
        "2 * max highest-root mark (affine 1 included)");

  const Integer f = Integer(mx.local_mark) * mx.positive_roots +
                    ceil_log2(mx.weyl_order * mx.weyl_order) + 1;
  L.set("f", f, "theorem:hecke", "d* |Phi+|* + ceil(2 log2 |W|*) + 1 (worst case p = 2)");

  const Integer n{spec.rep_dim};
  const Integer kprime = L.integer("A") * n * n * n * (2 * D_sp) * r;
  L.set("kprime", kprime, "theorem:hecke", "A n^3 (2 D_sp) r_G");
  L.set("k", Integer(kprime + f), "theorem:hecke", "kprime + f");

  const Integer pi0 = ipow(2 * D, r) * ceil_sqrt(ipow(Integer(r), r));
  L.set("pi0_bound", pi0, "lemma:new66", "(2D)^r_G * ceil(r_G^(r_G/2)) (Hadamard)");

  // B^(2b+2) = 2^(r_G (2b+2)) exactly.
  const Magnitude cohomology = Magnitude::power_of_two(Rational(Integer(r) * (2 * b + 2)), bits);
  const Magnitude c4 = mag_inv(mag_mul(Magnitude::from_integer(2 * pi0, bits), cohomology, bits));
  L.set("c4", c4, "lemma:new66", "(2 pi0_bound B^(2b+2))^-1");

  const Integer c3 = std::max(B, Integer(static_cast<unsigned long>(spec.bad_prime_ceiling)));
  L.set("c3", c3, "lemma:new66", "max(B, N)");

  const Magnitude c5 = mag_max(Magnitude::from_integer(c3, bits), mag_div(cohomology, c4, bits));
  L.set("c5", c5, "lemma:new67", "max(c3, c4^-1 B^(2b+2))");

  L.set("d_cmp", Integer(Integer(r) * r * r), "lemma:lowerbound", "r_G^3");

  {
    const Bracket pi = pi_bracket();
    const Magnitude two_pi = Magnitude::from_value_bounds(2 * pi.low, 2 * pi.high, bits);
    L.set("prasad_floor", mag_pow(two_pi, Rational(-rd.dim), bits), "prasad-factor",
          "(2 pi)^-dim_G");
  }

  const C1Delta cd = synthesize_c1_delta(L, bits);
  L.set("c1_threshold", cd.threshold, "theorem:mainbound",
        cd.chebyshev_product ? "ceil max(c3, c5, C^4, (C/c4)^(4/3)); prime product via pi(T)<=T, prod p<=4^T"
                             : "ceil max(c3, c5, C^4, (C/c4)^(4/3))");
  L.set("c1", cd.c1, "theorem:mainbound",
        "(2 pi)^-dim_G B^-1 c2^-1 prod_{p <= T} (C p^(1/4))^-1");
  L.set("delta", cd.delta, "theorem:mainbound", "1/4");
  return L;
}

std::string format_value(const LedgerValue& value) {
  if (const auto* i = std::get_if<Integer>(&value)) return "int:" + to_string(*i);
  if (const auto* q = std::get_if<Rational>(&value)) return "rat:" + to_string(*q);
  const auto& m = std::get<Magnitude>(value);
  return "log2:" + to_string(m.log2_low()) + "," + to_string(m.log2_high());
}

std::string serialize_ledger(const ConstantsLedger& ledger, std::string_view prefix) {
  std::ostringstream os;
  for (const auto& e : ledger.entries())
    os << prefix << e.name << '=' << format_value(e.value) << "|prov:" << e.provenance
       << "|formula:" << e.formula << '\n';
  return os.str();
}

namespace {

LedgerValue parse_value(std::string_view text) {
  if (text.starts_with("int:")) return parse_integer(text.substr(4));
  if (text.starts_with("rat:")) return parse_rational(text.substr(4));
  if (text.starts_with("log2:")) {
    const std::string_view body = text.substr(5);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw DomainError("log2 value needs two bounds");
    return Magnitude::from_log2(parse_rational(body.substr(0, comma)),
                                parse_rational(body.substr(comma + 1)), kExactBits);
  }
  throw DomainError("unknown ledger value kind in '" + std::string(text) + "'");
}

}  // namespace

ConstantsLedger parse_ledger(std::string_view text, std::string_view prefix) {
  ConstantsLedger ledger;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = line;
    if (!v.starts_with(prefix)) continue;
    v.remove_prefix(prefix.size());
    const auto eq = v.find('=');
    const auto bar1 = v.find("|prov:");
    const auto bar2 = v.find("|formula:");
    if (eq == std::string_view::npos || bar1 == std::string_view::npos ||
        bar2 == std::string_view::npos || !(eq < bar1 && bar1 < bar2))
      continue;
    ledger.set(std::string(v.substr(0, eq)), parse_value(v.substr(eq + 1, bar1 - eq - 1)),
               std::string(v.substr(bar1 + 6, bar2 - bar1 - 6)),
               std::string(v.substr(bar2 + 9)));
  }
  return ledger;
}

}  // namespace aobound
