#include "aobound/report.hpp"

#include "aobound/bounds.hpp"
#include "aobound/constants.hpp"

#include <sstream>

namespace aobound {

namespace {

std::string decimal(const Rational& q) {
  // Six decimals, truncated toward zero; exact for display purposes only.
  const Integer scaled = floor_of(q * 1000000);
  const bool negative = scaled < 0;
  const Integer a = negative ? Integer(-scaled) : scaled;
  std::string digits = to_string(a);
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  digits.insert(digits.size() - 6, ".");
  return (negative ? "-" : "") + digits;
}

std::string join(const std::set<std::uint64_t>& s) {
  std::string out;
  for (auto p : s) out += (out.empty() ? "" : ",") + std::to_string(p);
  return out;
}

std::string text_value(const LedgerValue& v) {
  if (const auto* i = std::get_if<Integer>(&v)) return to_string(*i);
  if (const auto* q = std::get_if<Rational>(&v)) return to_string(*q);
  return "2^(" + describe(std::get<Magnitude>(v)) + ")";
}

struct Emitter {
  bool machine;
  std::ostringstream os;

  void kv(const std::string& key, const std::string& label, const std::string& value) {
    if (machine) os << key << '=' << value << '\n';
    else os << label << ": " << value << '\n';
  }
  void mag(const std::string& key, const std::string& label, const Magnitude& m) {
    if (machine) os << key << '=' << format_value(m) << '\n';
    else os << label << ": 2^(" << describe(m) << ")\n";
  }
};

std::string render(const RunConfig& cfg, unsigned bits, const VerifySummary* summary) {
  const bool machine = cfg.report_format == ReportFormat::machine;
  Emitter e{machine, {}};
  const AssembleOptions opts{bits, kDefaultWeightCap};
  const ConstantsLedger ledger = assemble_ledger(cfg.ambient, opts);
  const Integer N{static_cast<unsigned long>(cfg.ambient.bad_prime_ceiling)};

  if (machine) e.os << "format=aobound-report-1\n";
  else e.os << "aobound report\n";
  std::string factors;
  for (const auto& f : cfg.ambient.factors)
    factors += (factors.empty() ? "" : ",") + f.type.name() + ":" + std::to_string(f.degree);
  e.kv("ambient.factors", "ambient factors", factors);
  e.kv("ambient.rep_dim", "rep_dim", std::to_string(cfg.ambient.rep_dim));
  e.kv("ambient.bad_prime_ceiling", "bad_prime_ceiling", to_string(N));
  e.kv("ambient.declared_sigma", "declared_sigma", join(cfg.ambient.declared_sigma));
  e.kv("precision_bits", "precision_bits", std::to_string(bits));

  if (machine) {
    e.os << serialize_ledger(ledger, "ledger.");
  } else {
    e.os << "\nconstants\n";
    for (const auto& en : ledger.entries())
      e.os << "  " << en.name << " = " << text_value(en.value) << "  [" << en.provenance << "] "
           << en.formula << '\n';
  }

  std::optional<FinalBound> upper;
  if (cfg.problem) {
    const auto& pb = *cfg.problem;
    if (!machine) e.os << "\nfinal degree bound\n";
    e.kv("bound.dim_Z", "  dim_Z", std::to_string(pb.dim_Z));
    e.kv("bound.deg_Z", "  deg_Z", to_string(pb.deg_Z));
    FinalBoundOptions fo;
    fo.precision_bits = bits;
    fo.max_log2 = cfg.max_log2;
    upper = final_degree_bound(ledger, pb, N, fo);
    const FinalBound& fb = *upper;
    if (fb.exact) {
      e.kv("bound.final", "  final_degree_bound", (machine ? "int:" : "") + to_string(*fb.exact));
      e.kv("bound.rule", "  rule", "dim_Z <= 2, no cutting steps, deg V <= deg Z");
    } else {
      e.kv("bound.log2_x0", "  log2 x0", to_string(*fb.log2_x0));
      e.kv("bound.final", "  final_degree_bound", "2^" + to_string(*fb.log2_x0));
      e.mag("bound.F_x0", "  F(x0)", fb.f_at_x0);
      e.mag("bound.F_2x0", "  F(2 x0)", fb.f_at_2x0);
      e.kv("bound.F_x0_lt_x0", "  F(x0) < x0", to_string(fb.below_at_x0));
      e.kv("bound.F_2x0_lt_2x0", "  F(2 x0) < 2 x0", to_string(fb.below_at_2x0));
      e.kv("bound.slope_below_one", "  slope of log F below 1 beyond x0", to_string(fb.slope_below_one));
      e.kv("bound.evaluations", "  F evaluations", std::to_string(fb.evaluations));
    }
  }

  if (cfg.subgroup) {
    const auto& sg = *cfg.subgroup;
    if (!machine) e.os << "\nlower bound for special subvarieties\n";
    std::string sf;
    for (const auto& f : sg.factors) sf += (sf.empty() ? "" : ",") + f.type.name() + ":" + std::to_string(f.degree);
    e.kv("lower.factors", "  factors", sf);
    e.kv("lower.sigma_V", "  sigma_V", join(sg.sigma_V));
    Integer pi_v = 1;
    for (auto p : sg.sigma_V) pi_v *= Integer(static_cast<unsigned long>(p));
    e.kv("lower.Pi_V", "  Pi_V", to_string(pi_v));
    e.mag("lower.c1_Pi_delta", "  c1 Pi_V^delta", degree_lower_bound(ledger, sg, bits));
    e.mag("lower.volume", "  volume bound", volume_lower_bound(ledger, sg, bits));
    const Magnitude lower = best_lower_bound(ledger, sg, bits);
    e.mag("lower.best", "  best lower bound", lower);
    if (upper) {
      const Magnitude x0 = upper->exact ? Magnitude::from_integer(*upper->exact, bits) : upper->x0;
      e.kv("consistency.lower_le_upper", "  lower <= upper", to_string(certify_less_equal(lower, x0)));
    }
  }

  if (summary) {
    if (!machine) e.os << "\nverify\n" << format_summary(*summary);
    else
      for (const auto& r : summary->results) e.os << "verify." << r.name << '=' << (r.passed ? "ok" : "FAIL") << '\n';
    e.kv("verify.result", "verify result", summary->passed() ? "pass" : "fail");
  }
  return e.os.str();
}

}  // namespace

std::string describe(const Magnitude& m) {
  return decimal(m.log2_low()) + ".." + decimal(m.log2_high());
}

RunOutput run(const RunConfig& config, const VerifyProviders& providers) {
  std::optional<VerifySummary> summary;
  if (config.verify_level != VerifyLevel::none) summary = verify(config.verify_level, providers);
  RunOutput out;
  out.verify_passed = !summary || summary->passed();
  unsigned bits = config.precision_bits;
  for (;;) {
    try {
      out.report = render(config, bits, summary ? &*summary : nullptr);
      out.precision_bits = bits;
      return out;
    } catch (const IndeterminateError&) {
      if (bits >= kMaxEscalatedBits) throw;
      bits = std::min(2 * bits, kMaxEscalatedBits);
    }
  }
}

}  // namespace aobound
