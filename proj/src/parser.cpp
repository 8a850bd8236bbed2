#include "tempval/parser.hpp"

#include <algorithm>
#include <cctype>

namespace tempval {

std::string file_role_name(FileRole role) {
  switch (role) {
    case FileRole::Domain:
      return "domain";
    case FileRole::Problem:
      return "problem";
    case FileRole::Plan:
      return "plan";
  }
  return "?";
}

namespace {

std::string describe_error(FileRole role, SourcePos pos, const std::string& expected, const std::string& found) {
  return file_role_name(role) + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) +
         ": expected " + expected + ", found " + found;
}

}  // namespace

ParseError::ParseError(FileRole role, SourcePos pos, std::string expected, std::string found)
    : std::runtime_error(describe_error(role, pos, expected, found)),
      role_(role),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnsupportedRequirement::UnsupportedRequirement(FileRole role, SourcePos pos, std::string flag)
    : ParseError(role, pos, "supported requirement", flag), flag_(std::move(flag)) {}

PlanValueError::PlanValueError(SourcePos pos, const std::string& message)
    : std::runtime_error("plan:" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos) {}

namespace {

constexpr int kMaxDepth = 256;

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// ---------------------------------------------------------------------------
// S-expressions

struct SExpr {
  bool is_list = false;
  std::string symbol;
  std::vector<SExpr> items;
  SourcePos pos;

  bool is_symbol(std::string_view s) const { return !is_list && symbol == s; }
  bool head_is(std::string_view s) const { return is_list && !items.empty() && items[0].is_symbol(s); }
};

std::string show(const SExpr& e) {
  if (!e.is_list) {
    return "'" + e.symbol + "'";
  }
  if (e.items.empty()) {
    return "'()'";
  }
  return e.items[0].is_list ? "list" : "'(" + e.items[0].symbol + " ...)'";
}

class Reader {
 public:
  Reader(std::string_view text, FileRole role) : text_(text), role_(role) {}

  SExpr read_toplevel() {
    skip_space();
    if (at_end()) {
      fail("'('", "end of input");
    }
    SExpr e = read(0);
    skip_space();
    if (!at_end()) {
      fail("end of input", "'" + std::string(1, text_[i_]) + "'");
    }
    return e;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  SourcePos here() const { return {line_, col_}; }

  [[noreturn]] void fail(const std::string& expected, const std::string& found) const {
    throw ParseError(role_, here(), expected, found);
  }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end()) {
      const char c = text_[i_];
      if (c == ';') {
        while (!at_end() && text_[i_] != '\n') {
          advance();
        }
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        advance();
      } else {
        return;
      }
    }
  }

  SExpr read(int depth) {
    if (depth > kMaxDepth) {
      fail("nesting depth <= " + std::to_string(kMaxDepth), "deeper nesting");
    }
    skip_space();
    if (at_end()) {
      fail("expression", "end of input");
    }
    SExpr e;
    e.pos = here();
    if (text_[i_] == '(') {
      e.is_list = true;
      advance();
      while (true) {
        skip_space();
        if (at_end()) {
          fail("')'", "end of input");
        }
        if (text_[i_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read(depth + 1));
      }
    }
    if (text_[i_] == ')') {
      fail("expression", "')'");
    }
    const std::size_t begin = i_;
    while (!at_end()) {
      const char c = text_[i_];
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c)) != 0) {
        break;
      }
      advance();
    }
    e.symbol = lowercase(text_.substr(begin, i_ - begin));
    return e;
  }

  std::string_view text_;
  FileRole role_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---------------------------------------------------------------------------
// Tree walking

class Builder {
 public:
  explicit Builder(FileRole role) : role_(role) {}

  [[noreturn]] void fail(const SExpr& at, const std::string& expected) const {
    throw ParseError(role_, at.pos, expected, show(at));
  }
  [[noreturn]] void fail_end(const SExpr& list, const std::string& expected) const {
    throw ParseError(role_, list.pos, expected, "end of list");
  }

  const SExpr& expect_list(const SExpr& e, const std::string& what) const {
    if (!e.is_list) {
      fail(e, what);
    }
    return e;
  }

  const std::string& expect_name(const SExpr& e, const std::string& what) const {
    if (e.is_list || e.symbol.empty() || e.symbol[0] == '?' || e.symbol[0] == ':' || e.symbol == "-") {
      fail(e, what);
    }
    return e.symbol;
  }

  std::string expect_variable(const SExpr& e) const {
    if (e.is_list || e.symbol.size() < 2 || e.symbol[0] != '?') {
      fail(e, "variable");
    }
    return e.symbol.substr(1);
  }

  Rational expect_number(const SExpr& e) const {
    if (e.is_list) {
      fail(e, "number");
    }
    try {
      return Rational::from_decimal(e.symbol);
    } catch (const DecimalFormatError& err) {
      throw ParseError(role_, {e.pos.line, e.pos.column + static_cast<int>(err.position())}, "decimal number",
                       "'" + e.symbol + "'");
    }
  }

  EitherType parse_type(const SExpr& e) const {
    if (!e.is_list) {
      return {expect_name(e, "type name")};
    }
    if (!e.head_is("either") || e.items.size() < 2) {
      fail(e, "type name or (either ...)");
    }
    EitherType out;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const std::string& name = expect_name(e.items[i], "type name");
      if (std::find(out.begin(), out.end(), name) != out.end()) {
        fail(e.items[i], "distinct type in either");
      }
      out.push_back(name);
    }
    return out;
  }

  /// `a b - t c - (either u v) d` starting at items[from].
  std::vector<TypedName> parse_typed_list(const SExpr& list, std::size_t from, bool variables) const {
    std::vector<TypedName> out;
    std::size_t pending = 0;
    for (std::size_t i = from; i < list.items.size(); ++i) {
      const SExpr& item = list.items[i];
      if (item.is_symbol("-")) {
        if (pending == 0) {
          fail(item, variables ? "variable before '-'" : "name before '-'");
        }
        if (i + 1 >= list.items.size()) {
          fail_end(list, "type after '-'");
        }
        const EitherType type = parse_type(list.items[++i]);
        for (std::size_t k = out.size() - pending; k < out.size(); ++k) {
          out[k].type = type;
        }
        out.back().ends_group = true;
        pending = 0;
        continue;
      }
      TypedName tn;
      tn.name = variables ? expect_variable(item) : expect_name(item, "name");
      tn.pos = item.pos;
      out.push_back(std::move(tn));
      ++pending;
    }
    return out;
  }

  Term parse_term(const SExpr& e, bool allow_variables) const {
    if (e.is_list) {
      fail(e, "term");
    }
    Term t;
    t.pos = e.pos;
    if (!e.symbol.empty() && e.symbol[0] == '?') {
      if (!allow_variables) {
        fail(e, "ground object");
      }
      t.name = expect_variable(e);
      t.is_variable = true;
    } else {
      t.name = expect_name(e, "term");
    }
    return t;
  }

  AtomAst parse_atom(const SExpr& e, bool allow_variables) const {
    expect_list(e, "atom");
    if (e.items.empty()) {
      fail(e, "atom");
    }
    AtomAst atom;
    atom.pos = e.pos;
    if (e.items[0].is_symbol("=")) {
      atom.is_equality = true;
      if (e.items.size() != 3) {
        fail(e, "(= term term)");
      }
    } else {
      atom.predicate = expect_name(e.items[0], "predicate name");
    }
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      atom.args.push_back(parse_term(e.items[i], allow_variables));
    }
    return atom;
  }

  FormulaAst parse_formula(const SExpr& e, bool allow_variables, int depth = 0) const {
    expect_list(e, "formula");
    FormulaAst f;
    f.pos = e.pos;
    if (e.items.empty()) {
      f.kind = FormulaAst::Kind::True;
      return f;
    }
    const SExpr& head = e.items[0];
    auto children = [&](std::size_t expected_count) {
      if (expected_count != 0 && e.items.size() != expected_count + 1) {
        fail(e, "(" + head.symbol + ") with " + std::to_string(expected_count) + " argument(s)");
      }
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        f.children.push_back(parse_formula(e.items[i], allow_variables, depth + 1));
      }
    };
    if (head.is_symbol("and")) {
      f.kind = FormulaAst::Kind::And;
      children(0);
    } else if (head.is_symbol("or")) {
      f.kind = FormulaAst::Kind::Or;
      children(0);
    } else if (head.is_symbol("not")) {
      f.kind = FormulaAst::Kind::Not;
      children(1);
    } else if (head.is_symbol("imply")) {
      f.kind = FormulaAst::Kind::Imply;
      children(2);
    } else if (head.is_symbol("exists") || head.is_symbol("forall") || head.is_symbol("preference")) {
      fail(head, "supported formula (quantifiers are not supported)");
    } else if (head.is_symbol("<") || head.is_symbol(">") || head.is_symbol("<=") || head.is_symbol(">=")) {
      fail(head, "supported formula (numeric conditions are not supported)");
    } else {
      f.kind = FormulaAst::Kind::Atom;
      f.atom = parse_atom(e, allow_variables);
    }
    return f;
  }

  DurationExpr parse_duration_rhs(const SExpr& e) const {
    DurationExpr out;
    if (!e.is_list) {
      out.literal = expect_number(e);
      return out;
    }
    if (e.items.empty()) {
      fail(e, "number or function term");
    }
    const SExpr& head = e.items[0];
    if (head.is_symbol("+") || head.is_symbol("-") || head.is_symbol("*") || head.is_symbol("/")) {
      fail(head, "number or function term (arithmetic in duration constraints is not supported)");
    }
    FunctionTermAst term;
    term.pos = e.pos;
    term.name = expect_name(head, "function name");
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      term.args.push_back(parse_term(e.items[i], true));
    }
    out.function = std::move(term);
    return out;
  }

  DurationConstraint parse_duration(const SExpr& e) const {
    expect_list(e, "duration constraint");
    DurationConstraint c;
    c.pos = e.pos;
    if (e.items.empty()) {
      return c;
    }
    if (e.head_is("and")) {
      c.kind = DurationConstraint::Kind::Conj;
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        c.parts.push_back(parse_duration(e.items[i]));
      }
      return c;
    }
    if (e.head_is("at")) {
      fail(e.items[0], "untimed duration constraint");
    }
    if (e.head_is("=")) {
      c.kind = DurationConstraint::Kind::Eq;
    } else if (e.head_is("<=")) {
      c.kind = DurationConstraint::Kind::Leq;
    } else if (e.head_is(">=")) {
      c.kind = DurationConstraint::Kind::Geq;
    } else {
      fail(e, "(= ?duration ...), (<= ?duration ...), (>= ?duration ...) or (and ...)");
    }
    if (e.items.size() != 3) {
      fail(e, "two operands in duration constraint");
    }
    if (!e.items[1].is_symbol("?duration")) {
      fail(e.items[1], "?duration");
    }
    c.rhs = parse_duration_rhs(e.items[2]);
    return c;
  }

  static bool is_timed(const SExpr& e) {
    if (!e.is_list || e.items.size() != 3) {
      return false;
    }
    return (e.items[0].is_symbol("at") && (e.items[1].is_symbol("start") || e.items[1].is_symbol("end"))) ||
           (e.items[0].is_symbol("over") && e.items[1].is_symbol("all"));
  }

  static TimeSpec time_spec_of(const SExpr& e) {
    if (e.items[0].is_symbol("over")) {
      return TimeSpec::OverAll;
    }
    return e.items[1].is_symbol("start") ? TimeSpec::AtStart : TimeSpec::AtEnd;
  }

  void parse_timed_conditions(const SExpr& e, std::vector<TimedCondition>& out) const {
    expect_list(e, "condition");
    if (e.items.empty()) {
      return;
    }
    if (e.head_is("and")) {
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        parse_timed_conditions(e.items[i], out);
      }
      return;
    }
    if (!is_timed(e)) {
      fail(e, "(at start ...), (at end ...) or (over all ...)");
    }
    out.push_back({time_spec_of(e), parse_formula(e.items[2], true)});
  }

  LiteralAst parse_literal(const SExpr& e) const {
    expect_list(e, "literal");
    if (e.head_is("not")) {
      if (e.items.size() != 2) {
        fail(e, "(not atom)");
      }
      return {parse_effect_atom(e.items[1]), false};
    }
    return {parse_effect_atom(e), true};
  }

  AtomAst parse_effect_atom(const SExpr& e) const {
    expect_list(e, "atom");
    if (!e.items.empty()) {
      const SExpr& head = e.items[0];
      if (head.is_symbol("increase") || head.is_symbol("decrease") || head.is_symbol("assign") ||
          head.is_symbol("scale-up") || head.is_symbol("scale-down")) {
        fail(head, "literal (numeric effects are not supported)");
      }
      if (head.is_symbol("when") || head.is_symbol("forall")) {
        fail(head, "literal (conditional and universal effects are not supported)");
      }
      if (head.is_symbol("=")) {
        fail(head, "literal (equality cannot be an effect)");
      }
    }
    return parse_atom(e, true);
  }

  void parse_literals(const SExpr& e, TimeSpec when, std::vector<TimedEffect>& out) const {
    expect_list(e, "effect");
    if (e.items.empty()) {
      return;
    }
    if (e.head_is("and")) {
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        parse_literals(e.items[i], when, out);
      }
      return;
    }
    out.push_back({when, parse_literal(e)});
  }

  void parse_timed_effects(const SExpr& e, std::vector<TimedEffect>& out) const {
    expect_list(e, "effect");
    if (e.items.empty()) {
      return;
    }
    if (e.head_is("and")) {
      for (std::size_t i = 1; i < e.items.size(); ++i) {
        parse_timed_effects(e.items[i], out);
      }
      return;
    }
    if (!is_timed(e)) {
      fail(e, "(at start ...) or (at end ...)");
    }
    const TimeSpec when = time_spec_of(e);
    if (when == TimeSpec::OverAll) {
      fail(e.items[0], "effect annotated at start or at end");
    }
    parse_literals(e.items[2], when, out);
  }

  ActionSchemaAst parse_schema(const SExpr& e, bool durative) const {
    ActionSchemaAst s;
    s.pos = e.pos;
    s.durative = durative;
    if (e.items.size() < 2) {
      fail_end(e, "action name");
    }
    s.name = expect_name(e.items[1], "action name");
    bool seen_duration = false;
    for (std::size_t i = 2; i < e.items.size(); i += 2) {
      const SExpr& key = e.items[i];
      if (key.is_list || key.symbol.empty() || key.symbol[0] != ':') {
        fail(key, "action keyword");
      }
      if (i + 1 >= e.items.size()) {
        fail_end(e, "value for " + key.symbol);
      }
      const SExpr& value = e.items[i + 1];
      if (key.symbol == ":parameters") {
        s.parameters = parse_typed_list(expect_list(value, "parameter list"), 0, true);
      } else if (durative && key.symbol == ":duration") {
        s.duration = parse_duration(value);
        seen_duration = true;
      } else if (durative && key.symbol == ":condition") {
        parse_timed_conditions(value, s.conditions);
      } else if (durative && key.symbol == ":effect") {
        parse_timed_effects(value, s.effects);
      } else if (!durative && key.symbol == ":precondition") {
        s.conditions.push_back({TimeSpec::AtStart, parse_formula(value, true)});
      } else if (!durative && key.symbol == ":effect") {
        parse_literals(value, TimeSpec::AtStart, s.effects);
      } else {
        fail(key, durative ? ":parameters, :duration, :condition or :effect"
                           : ":parameters, :precondition or :effect");
      }
    }
    if (durative && (!seen_duration || s.duration.kind == DurationConstraint::Kind::None)) {
      fail(e.items[1], "durative action with a :duration constraint");
    }
    return s;
  }

  std::set<Requirement> parse_requirements(const SExpr& e) const {
    std::set<Requirement> out;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& flag = e.items[i];
      if (flag.is_list || flag.symbol.size() < 2 || flag.symbol[0] != ':') {
        fail(flag, "requirement flag");
      }
      const std::string name = flag.symbol.substr(1);
      auto req = requirement_from_name(name);
      if (!req) {
        throw UnsupportedRequirement(role_, flag.pos, flag.symbol);
      }
      out.insert(*req);
    }
    return out;
  }

  PredicateDecl parse_signature(const SExpr& e) const {
    expect_list(e, "(name ?param ...)");
    if (e.items.empty()) {
      fail(e, "(name ?param ...)");
    }
    PredicateDecl d;
    d.pos = e.pos;
    d.name = expect_name(e.items[0], "name");
    d.parameters = parse_typed_list(e, 1, true);
    return d;
  }

  std::string parse_header(const SExpr& root, const std::string& kind) const {
    expect_list(root, "(define ...)");
    if (!root.head_is("define")) {
      fail(root, "(define ...)");
    }
    if (root.items.size() < 2) {
      fail_end(root, "(" + kind + " name)");
    }
    const SExpr& header = root.items[1];
    if (!header.head_is(kind) || header.items.size() != 2) {
      fail(header, "(" + kind + " name)");
    }
    return expect_name(header.items[1], kind + " name");
  }

  DomainAst build_domain(const SExpr& root) const {
    DomainAst d;
    d.pos = root.pos;
    d.name = parse_header(root, "domain");
    for (std::size_t i = 2; i < root.items.size(); ++i) {
      const SExpr& section = expect_list(root.items[i], "domain section");
      if (section.items.empty() || section.items[0].is_list) {
        fail(section, "domain section");
      }
      const std::string& key = section.items[0].symbol;
      if (key == ":requirements") {
        d.requirements = parse_requirements(section);
      } else if (key == ":types") {
        for (const auto& tn : parse_typed_list(section, 1, false)) {
          d.types.push_back({tn.name, tn.type, tn.pos});
        }
      } else if (key == ":constants") {
        d.constants = parse_typed_list(section, 1, false);
      } else if (key == ":predicates") {
        for (std::size_t k = 1; k < section.items.size(); ++k) {
          d.predicates.push_back(parse_signature(section.items[k]));
        }
      } else if (key == ":functions") {
        for (std::size_t k = 1; k < section.items.size(); ++k) {
          const SExpr& item = section.items[k];
          if (item.is_symbol("-")) {
            if (k + 1 >= section.items.size() || !section.items[k + 1].is_symbol("number")) {
              fail(k + 1 < section.items.size() ? section.items[k + 1] : section, "number");
            }
            ++k;
            continue;
          }
          d.functions.push_back(parse_signature(item));
        }
      } else if (key == ":durative-action") {
        d.schemata.push_back(parse_schema(section, true));
      } else if (key == ":action") {
        d.schemata.push_back(parse_schema(section, false));
      } else {
        fail(section.items[0], "domain section keyword");
      }
    }
    return d;
  }

  ProblemAst build_problem(const SExpr& root) const {
    ProblemAst p;
    p.pos = root.pos;
    p.name = parse_header(root, "problem");
    bool seen_goal = false;
    for (std::size_t i = 2; i < root.items.size(); ++i) {
      const SExpr& section = expect_list(root.items[i], "problem section");
      if (section.items.empty() || section.items[0].is_list) {
        fail(section, "problem section");
      }
      const std::string& key = section.items[0].symbol;
      if (key == ":domain") {
        if (section.items.size() != 2) {
          fail(section, "(:domain name)");
        }
        p.domain_name = expect_name(section.items[1], "domain name");
      } else if (key == ":requirements") {
        p.requirements = parse_requirements(section);
      } else if (key == ":objects") {
        p.objects = parse_typed_list(section, 1, false);
      } else if (key == ":init") {
        for (std::size_t k = 1; k < section.items.size(); ++k) {
          parse_init_item(section.items[k], p);
        }
      } else if (key == ":goal") {
        if (section.items.size() != 2) {
          fail(section, "(:goal formula)");
        }
        p.goal = parse_formula(section.items[1], false);
        seen_goal = true;
      } else if (key == ":metric") {
        // Validity does not depend on the metric.
      } else {
        fail(section.items[0], "problem section keyword");
      }
    }
    if (!seen_goal) {
      fail_end(root, "(:goal ...)");
    }
    return p;
  }

  void parse_init_item(const SExpr& e, ProblemAst& p) const {
    expect_list(e, "initial atom");
    if (e.head_is("=")) {
      if (e.items.size() != 3) {
        fail(e, "(= (function args) number)");
      }
      const SExpr& lhs = expect_list(e.items[1], "function term");
      if (lhs.items.empty()) {
        fail(lhs, "function term");
      }
      FunctionAssignment fa;
      fa.pos = e.pos;
      fa.term.pos = lhs.pos;
      fa.term.name = expect_name(lhs.items[0], "function name");
      for (std::size_t i = 1; i < lhs.items.size(); ++i) {
        fa.term.args.push_back(parse_term(lhs.items[i], false));
      }
      fa.value = expect_number(e.items[2]);
      p.init_functions.push_back(std::move(fa));
      return;
    }
    if (e.head_is("at") && e.items.size() == 3 && !e.items[1].is_list &&
        !e.items[1].symbol.empty() && (std::isdigit(static_cast<unsigned char>(e.items[1].symbol[0])) != 0)) {
      fail(e.items[0], "initial atom (timed initial literals are not supported)");
    }
    if (e.head_is("not")) {
      fail(e.items[0], "positive initial atom");
    }
    p.init_atoms.push_back(parse_atom(e, false));
  }

 private:
  FileRole role_;
};

// ---------------------------------------------------------------------------
// Plan lines: `<decimal>: (<name> <args>*)[<decimal>]`

class PlanLineParser {
 public:
  PlanLineParser(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

  PlanStep parse() {
    PlanStep step;
    step.pos = here();
    skip_space();
    step.pos = here();
    const SourcePos time_pos = here();
    const std::string time_text = take_while([](char c) { return c != ':' && c != '(' && !is_space(c); });
    step.time = number(time_text, time_pos);
    skip_space();
    expect(':', "':' after start time");
    skip_space();
    expect('(', "'(' before action name");
    skip_space();
    const SourcePos name_pos = here();
    step.action = lowercase(take_while([](char c) { return c != ')' && c != '(' && !is_space(c); }));
    if (step.action.empty()) {
      fail(name_pos, "action name");
    }
    while (true) {
      skip_space();
      if (peek() == ')') {
        ++i_;
        break;
      }
      if (at_end() || peek() == '(' || peek() == '[') {
        fail(here(), "object name or ')'");
      }
      step.args.push_back(lowercase(take_while([](char c) { return c != ')' && c != '(' && !is_space(c); })));
    }
    skip_space();
    if (peek() == '[') {
      ++i_;
      skip_space();
      const SourcePos dur_pos = here();
      const std::string dur_text = take_while([](char c) { return c != ']' && !is_space(c); });
      step.duration = number(dur_text, dur_pos);
      skip_space();
      expect(']', "']' after duration");
      skip_space();
    }
    if (!at_end()) {
      fail(here(), "end of line");
    }
    if (step.time.is_negative()) {
      throw PlanValueError(time_pos, "negative start time " + step.time.to_string());
    }
    if (step.duration && step.duration->is_negative()) {
      throw PlanValueError(step.pos, "negative duration " + step.duration->to_string());
    }
    return step;
  }

 private:
  static bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
  bool at_end() const { return i_ >= line_.size(); }
  char peek() const { return at_end() ? '\0' : line_[i_]; }
  SourcePos here() const { return {line_no_, static_cast<int>(i_) + 1}; }

  [[noreturn]] void fail(SourcePos pos, const std::string& expected) const {
    const std::size_t col = static_cast<std::size_t>(pos.column - 1);
    std::string found = col < line_.size() ? "'" + std::string(1, line_[col]) + "'" : "end of line";
    throw ParseError(FileRole::Plan, pos, expected, found);
  }

  void skip_space() {
    while (!at_end() && is_space(line_[i_])) {
      ++i_;
    }
  }

  void expect(char c, const std::string& what) {
    if (peek() != c) {
      fail(here(), what);
    }
    ++i_;
  }

  template <typename Pred>
  std::string take_while(Pred pred) {
    const std::size_t begin = i_;
    while (!at_end() && pred(line_[i_])) {
      ++i_;
    }
    return std::string(line_.substr(begin, i_ - begin));
  }

  Rational number(const std::string& text, SourcePos pos) const {
    try {
      return Rational::from_decimal(text);
    } catch (const DecimalFormatError& err) {
      throw ParseError(FileRole::Plan, {pos.line, pos.column + static_cast<int>(err.position())},
                       "decimal number", text.empty() ? "nothing" : "'" + text + "'");
    }
  }

  std::string_view line_;
  int line_no_;
  std::size_t i_ = 0;
};

}  // namespace

DomainAst parse_domain(std::string_view text) {
  const SExpr root = Reader(text, FileRole::Domain).read_toplevel();
  return Builder(FileRole::Domain).build_domain(root);
}

ProblemAst parse_problem(std::string_view text) {
  const SExpr root = Reader(text, FileRole::Problem).read_toplevel();
  return Builder(FileRole::Problem).build_problem(root);
}

PlanAst parse_plan(std::string_view text) {
  PlanAst plan;
  int line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    std::string_view line = text.substr(begin, end - begin);
    if (const auto semi = line.find(';'); semi != std::string_view::npos) {
      line = line.substr(0, semi);
    }
    if (!std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
      plan.steps.push_back(PlanLineParser(line, line_no).parse());
    }
    begin = end + 1;
  }
  return plan;
}

}  // namespace tempval
