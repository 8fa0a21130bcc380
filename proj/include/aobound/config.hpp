#pragma once

#include "aobound/bigint.hpp"
#include "aobound/bounds.hpp"
#include "aobound/constants.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace aobound {

enum class ReportFormat { text, machine };
enum class VerifyLevel { none, fast, full };

struct RunConfig {
  AmbientDatumSpec ambient;
  std::optional<SubvarietyProblem> problem;
  std::optional<SpecialSubgroupData> subgroup;
  ReportFormat report_format = ReportFormat::text;
  VerifyLevel verify_level = VerifyLevel::none;
  unsigned precision_bits = kDefaultPrecisionBits;
  Integer max_log2 = FinalBoundOptions{}.max_log2;
};

/// A malformed config; what() reads "line N: field 'x': ...".
class ParseError : public DomainError {
 public:
  ParseError(int line, std::string field, const std::string& message);
  int line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int line_;
  std::string field_;
};

/// Sections [ambient], [ambient.factor] (repeatable), [problem], [subgroup];
/// "key = value" lines; '#' or ';' start a comment.  Format in docs/conventions.md.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

ReportFormat parse_report_format(std::string_view text);
VerifyLevel parse_verify_level(std::string_view text);

}  // namespace aobound
