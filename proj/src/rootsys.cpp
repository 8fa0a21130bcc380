#include "aobound/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace aobound {

RootDatumSpec RootDatumSpec::parse(std::string_view text) {
  if (text.size() < 2) throw DomainError("root datum '" + std::string(text) + "': expected e.g. A2");
  const char letter = text.front();
  if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos)
    throw DomainError("root datum '" + std::string(text) + "': unknown family letter '" +
                      std::string(1, letter) + "'");
  const std::string_view digits = text.substr(1);
  if (digits.size() > 4 || !std::all_of(digits.begin(), digits.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }))
    throw DomainError("root datum '" + std::string(text) + "': bad rank");
  RootDatumSpec spec{static_cast<Family>(letter), std::stoi(std::string(digits))};
  validate(spec);
  return spec;
}

std::string RootDatumSpec::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool is_valid(const RootDatumSpec& spec) {
  const int r = spec.rank;
  switch (spec.family) {
    case Family::A:
      return r >= 1;
    case Family::B:
    case Family::C:
      return r >= 2;
    case Family::D:
      return r >= 3;
    case Family::E:
      return r >= 6 && r <= 8;
    case Family::F:
      return r == 4;
    case Family::G:
      return r == 2;
  }
  return false;
}

void validate(const RootDatumSpec& spec) {
  if (!is_valid(spec)) throw DomainError("invalid root datum " + spec.name());
}

IntMatrix cartan_matrix(const RootDatumSpec& spec) {
  validate(spec);
  const int n = spec.rank;
  IntMatrix a(n, n);
  auto link = [&a](int i, int j) {
    a(i, j) = -1;
    a(j, i) = -1;
  };
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;  // alpha_3 short
      break;
    case Family::G:
      link(0, 1);
      a(0, 1) = -3;  // alpha_1 short
      break;
  }
  return a;
}

Integer center_order(const RootDatumSpec& spec) { return abs(det(cartan_matrix(spec))); }

namespace {

int height(const RootVector& v) {
  int h = 0;
  for (int x : v) h += x;
  return h;
}

// Root-string generation from the simple roots: beta + alpha_i is a root iff
// q = p - <alpha_i^vee, beta> > 0, where p is how far beta extends down the
// alpha_i string.
std::vector<RootVector> positive_roots_of(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> cartan(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan[i * n + j] = static_cast<int>(a(i, j).get_si());

  std::set<RootVector> seen;
  std::vector<RootVector> level;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    level.push_back(e);
    seen.insert(e);
  }
  std::vector<RootVector> all;
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    all.insert(all.end(), level.begin(), level.end());
    std::set<RootVector> next;
    for (const RootVector& beta : level) {
      for (int i = 0; i < n; ++i) {
        if (height(beta) == 1 && beta[i] == 1) continue;
        int p = 0;
        RootVector down = beta;
        for (;;) {
          --down[i];
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan[i * n + j];
        if (p - pairing > 0) {
          RootVector up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (const auto& r : level) seen.insert(r);
  }
  return all;
}

}  // namespace

std::vector<RootVector> positive_roots(const RootDatumSpec& spec) {
  return positive_roots_of(cartan_matrix(spec));
}

std::vector<int> exponents(const RootDatumSpec& spec) {
  const auto roots = positive_roots(spec);
  std::map<int, int> per_height;
  for (const auto& r : roots) ++per_height[height(r)];
  // Heights histogram is a partition of |Phi+|; its conjugate is the
  // exponent multiset.
  std::vector<int> m;
  for (int j = 1; j <= spec.rank; ++j) {
    int count = 0;
    for (const auto& [h, c] : per_height)
      if (c >= j) ++count;
    m.push_back(count);
  }
  std::sort(m.begin(), m.end());
  return m;
}

Integer weyl_order(const RootDatumSpec& spec) {
  Integer w = 1;
  for (int m : exponents(spec)) w *= m + 1;
  return w;
}

WeylDimension::WeylDimension(const RootDatumSpec& spec)
    : rank_(spec.rank), coroots_(positive_roots_of(cartan_matrix(spec).transpose())) {
  denominator_ = 1;
  for (const auto& c : coroots_) denominator_ *= height(c);
}

Integer WeylDimension::operator()(const WeightVector& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_)
    throw DomainError("weight length does not match the rank");
  for (long x : lambda)
    if (x < 0) throw DomainError("weight coordinates must be non-negative");
  Integer numerator = 1;
  for (const auto& c : coroots_) {
    Integer pairing = 0;
    for (int j = 0; j < rank_; ++j) pairing += Integer(lambda[j] + 1) * c[j];
    numerator *= pairing;
  }
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator_.get_mpz_t()))
    throw std::logic_error("Weyl dimension formula produced a non-integer");
  Integer d;
  mpz_divexact(d.get_mpz_t(), numerator.get_mpz_t(), denominator_.get_mpz_t());
  return d;
}

Integer weyl_dim(const RootDatumSpec& spec, const WeightVector& lambda) {
  return WeylDimension(spec)(lambda);
}

std::vector<WeightVector> dominant_weights_up_to_dim(const RootDatumSpec& spec,
                                                     const Integer& n,
                                                     long coordinate_cap) {
  if (n < 1) throw DomainError("dimension bound must be at least 1");
  const WeylDimension dim(spec);
  std::vector<WeightVector> out;
  WeightVector current(spec.rank, 0);
  // The dimension is strictly increasing in every coordinate, so fixing a
  // prefix with zeros after it gives a lower bound for all completions.
  auto visit = [&](auto&& self, int index) -> void {
    if (index == spec.rank) {
      out.push_back(current);
      return;
    }
    for (long v = 0;; ++v) {
      current[index] = v;
      if (dim(current) > n) break;
      if (v >= coordinate_cap)
        throw CapExceeded("dominant weight enumeration for " + spec.name() +
                          " exceeded coordinate cap " + std::to_string(coordinate_cap));
      self(self, index + 1);
    }
    current[index] = 0;
  };
  visit(visit, 0);
  return out;
}

std::vector<int> highest_root_marks(const RootDatumSpec& spec) {
  std::vector<int> marks = positive_roots(spec).back();
  marks.push_back(1);
  return marks;
}

RatMatrix inverse_cartan(const RootDatumSpec& spec) {
  return inverse(to_rational(cartan_matrix(spec)));
}

long split_dimension(const RootDatumSpec& spec) {
  validate(spec);
  const long r = spec.rank;
  switch (spec.family) {
    case Family::A:
      return r * r + 2 * r;
    case Family::B:
    case Family::C:
      return 2 * r * r + r;
    case Family::D:
      return 2 * r * r - r;
    case Family::E:
      return r == 6 ? 78 : r == 7 ? 133 : 248;
    case Family::F:
      return 52;
    case Family::G:
      return 14;
  }
  return 0;
}

std::vector<RootDatumSpec> irreducible_types_up_to_rank(int max_rank) {
  std::vector<RootDatumSpec> out;
  for (char letter : std::string_view("ABCDEFG"))
    for (int r = 1; r <= max_rank; ++r) {
      RootDatumSpec spec{static_cast<Family>(letter), r};
      if (is_valid(spec)) out.push_back(spec);
    }
  return out;
}

}  // namespace aobound
