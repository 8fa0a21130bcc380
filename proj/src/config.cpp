#include "aobound/config.hpp"

#include "aobound/primes.hpp"
#include "aobound/rootsys.hpp"

#include <fstream>
#include <sstream>

namespace aobound {

ParseError::ParseError(int line, std::string field, const std::string& message)
    : DomainError("line " + std::to_string(line) +
                  (field.empty() ? std::string() : ": field '" + field + "'") + ": " + message),
      line_(line),
      field_(std::move(field)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view s) {
  const auto pos = s.find_first_of("#;");
  return pos == std::string_view::npos ? s : s.substr(0, pos);
}

enum class Section { none, ambient, ambient_factor, problem, subgroup };

struct Field {
  int line;
  std::string key;
};

class Parser {
 public:
  RunConfig parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      const std::string_view s = trim(strip_comment(raw));
      if (s.empty()) continue;
      if (s.front() == '[') {
        open_section(line, s);
        continue;
      }
      const auto eq = s.find('=');
      if (eq == std::string_view::npos) throw ParseError(line, "", "expected 'key = value'");
      const std::string key{trim(s.substr(0, eq))};
      const std::string_view value = trim(s.substr(eq + 1));
      if (key.empty()) throw ParseError(line, "", "missing key");
      assign(line, key, value);
    }
    finish_factor();
    return finish(line);
  }

 private:
  void open_section(int line, std::string_view s) {
    if (s.back() != ']') throw ParseError(line, "", "unterminated section header");
    const std::string_view name = trim(s.substr(1, s.size() - 2));
    finish_factor();
    if (name == "ambient") section_ = Section::ambient;
    else if (name == "ambient.factor") {
      section_ = Section::ambient_factor;
      factor_ = GroupFactor{};
      factor_line_ = line;
      factor_has_type_ = false;
    } else if (name == "problem") {
      section_ = Section::problem;
      if (!cfg_.problem) cfg_.problem = SubvarietyProblem{};
    } else if (name == "subgroup") {
      section_ = Section::subgroup;
      if (!cfg_.subgroup) cfg_.subgroup = SpecialSubgroupData{};
    } else {
      throw ParseError(line, "", "unknown section [" + std::string(name) + "]");
    }
  }

  void finish_factor() {
    if (section_ != Section::ambient_factor) return;
    if (!factor_has_type_) throw ParseError(factor_line_, "type", "[ambient.factor] needs a type");
    cfg_.ambient.factors.push_back(factor_);
    section_ = Section::none;
  }

  void assign(int line, const std::string& key, std::string_view value) {
    switch (section_) {
      case Section::none:
        throw ParseError(line, key, "key outside any section");
      case Section::ambient:
        if (key == "rep_dim") cfg_.ambient.rep_dim = positive_long(line, key, value, 2);
        else if (key == "bad_prime_ceiling")
          cfg_.ambient.bad_prime_ceiling = to_u64(line, key, integer(line, key, value, 2));
        else if (key == "declared_sigma") {
          cfg_.ambient.declared_sigma = prime_list(line, key, value);
          sigma_line_ = line;
        } else throw ParseError(line, key, "unknown key in [ambient]");
        return;
      case Section::ambient_factor:
        if (key == "type") {
          factor_.type = root_datum(line, key, value);
          factor_has_type_ = true;
        } else if (key == "degree") {
          factor_.degree = static_cast<int>(positive_long(line, key, value, 1, 1 << 20));
        } else throw ParseError(line, key, "unknown key in [ambient.factor]");
        return;
      case Section::problem:
        if (key == "dim_Z") cfg_.problem->dim_Z = positive_long(line, key, value, 1, 1L << 16);
        else if (key == "deg_Z") cfg_.problem->deg_Z = integer(line, key, value, 1);
        else throw ParseError(line, key, "unknown key in [problem]");
        return;
      case Section::subgroup:
        if (key == "factor") {
          const auto colon = value.find(':');
          GroupFactor f;
          f.type = root_datum(line, key, trim(value.substr(0, colon)));
          if (colon != std::string_view::npos)
            f.degree = static_cast<int>(positive_long(line, key, trim(value.substr(colon + 1)), 1, 1 << 20));
          cfg_.subgroup->factors.push_back(f);
        } else if (key == "sigma_V") {
          cfg_.subgroup->sigma_V = prime_list(line, key, value);
        } else if (key == "index_lower") {
          cfg_.subgroup->index_lower = integer(line, key, value, 1);
        } else if (key == "pi_tilde") {
          cfg_.subgroup->pi_tilde = integer(line, key, value, 1);
        } else throw ParseError(line, key, "unknown key in [subgroup]");
        return;
    }
  }

  RunConfig finish(int last_line) {
    if (cfg_.ambient.factors.empty())
      throw ParseError(last_line, "", "at least one [ambient.factor] section is required");
    for (std::uint64_t p : cfg_.ambient.declared_sigma)
      if (p >= cfg_.ambient.bad_prime_ceiling)
        throw ParseError(sigma_line_, "declared_sigma",
                         std::to_string(p) + " is not below bad_prime_ceiling " +
                             std::to_string(cfg_.ambient.bad_prime_ceiling));
    try {
      validate(cfg_.ambient);
    } catch (const DomainError& e) {
      throw ParseError(factor_line_, "", e.what());
    }
    if (cfg_.subgroup) {
      try {
        validate(*cfg_.subgroup, rank_and_dim(cfg_.ambient).rank);
      } catch (const DomainError& e) {
        throw ParseError(last_line, "", e.what());
      }
    }
    return cfg_;
  }

  static RootDatumSpec root_datum(int line, const std::string& key, std::string_view value) {
    try {
      return RootDatumSpec::parse(value);
    } catch (const DomainError& e) {
      throw ParseError(line, key, e.what());
    }
  }

  static Integer integer(int line, const std::string& key, std::string_view value, long min) {
    Integer v;
    try {
      v = parse_integer(value);
    } catch (const DomainError&) {
      throw ParseError(line, key, "expected an integer, got '" + std::string(value) + "'");
    }
    if (v < min) throw ParseError(line, key, "must be >= " + std::to_string(min));
    return v;
  }

  static long positive_long(int line, const std::string& key, std::string_view value, long min,
                            long max = 1L << 30) {
    const Integer v = integer(line, key, value, min);
    if (v > max) throw ParseError(line, key, "must be <= " + std::to_string(max));
    return v.get_si();
  }

  static std::uint64_t to_u64(int line, const std::string& key, const Integer& v) {
    if (bit_length(v) > 63) throw ParseError(line, key, "too large");
    return std::stoull(v.get_str());
  }

  static std::set<std::uint64_t> prime_list(int line, const std::string& key, std::string_view value) {
    std::set<std::uint64_t> out;
    while (!value.empty()) {
      const auto comma = value.find(',');
      const std::string_view item = trim(value.substr(0, comma));
      if (item.empty()) throw ParseError(line, key, "empty list item");
      const std::uint64_t p = to_u64(line, key, integer(line, key, item, 2));
      if (!is_prime_u64(p)) throw ParseError(line, key, std::to_string(p) + " is not prime");
      out.insert(p);
      if (comma == std::string_view::npos) break;
      value = value.substr(comma + 1);
    }
    return out;
  }

  RunConfig cfg_;
  Section section_ = Section::none;
  GroupFactor factor_;
  bool factor_has_type_ = false;
  int factor_line_ = 0;
  int sigma_line_ = 0;
};

}  // namespace

RunConfig parse_config(std::string_view text) { return Parser{}.parse(text); }

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::text;
  if (text == "machine") return ReportFormat::machine;
  throw DomainError("report format must be text or machine");
}

VerifyLevel parse_verify_level(std::string_view text) {
  if (text == "none") return VerifyLevel::none;
  if (text == "fast") return VerifyLevel::fast;
  if (text == "full") return VerifyLevel::full;
  throw DomainError("verify level must be fast or full");
}

}  // namespace aobound
