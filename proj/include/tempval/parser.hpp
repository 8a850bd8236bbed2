#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tempval/ast.hpp"

namespace tempval {

enum class FileRole { Domain, Problem, Plan };

std::string file_role_name(FileRole role);

/// Malformed input. `line`/`column` are 1-based and point at the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(FileRole role, SourcePos pos, std::string expected, std::string found);

  FileRole role() const noexcept { return role_; }
  SourcePos pos() const noexcept { return pos_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  FileRole role_;
  SourcePos pos_;
  std::string expected_;
  std::string found_;
};

/// A `:requirements` flag outside the supported set. `flag()` keeps the
/// colon (":fluents").
class UnsupportedRequirement : public ParseError {
 public:
  UnsupportedRequirement(FileRole role, SourcePos pos, std::string flag);
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

/// A syntactically fine plan step with a negative time or duration.
class PlanValueError : public std::runtime_error {
 public:
  PlanValueError(SourcePos pos, const std::string& message);
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

DomainAst parse_domain(std::string_view text);
ProblemAst parse_problem(std::string_view text);
/// Steps are kept in file order.
PlanAst parse_plan(std::string_view text);

}  // namespace tempval
