#include "tempval/wellformed.hpp"

#include <algorithm>
#include <functional>

namespace tempval {

std::string category_name(WfError::Category c) {
  using C = WfError::Category;
  switch (c) {
    case C::UndeclaredName:
      return "UndeclaredName";
    case C::ArityMismatch:
      return "ArityMismatch";
    case C::TypeMismatch:
      return "TypeMismatch";
    case C::DurationViolation:
      return "DurationViolation";
    case C::UndefinedFunctionValue:
      return "UndefinedFunctionValue";
    case C::DuplicateDefinition:
      return "DuplicateDefinition";
  }
  return "?";
}

std::string WfError::to_string() const {
  std::string out = category_name(category) + " '" + name + "'";
  if (!context.empty()) {
    out += " in " + context;
  }
  if (pos.line > 0) {
    out += " (line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------

SubtypeGraph::SubtypeGraph() { ancestors_["object"] = {"object"}; }

SubtypeGraph SubtypeGraph::build(const DomainAst& domain) {
  std::map<std::string, std::set<std::string>> parents;
  parents["object"];
  for (const auto& decl : domain.types) {
    auto& ps = parents[decl.name];
    if (decl.name == "object") {
      continue;
    }
    for (const auto& super : decl.supertypes) {
      ps.insert(super);
      if (!parents.count(super)) {
        parents[super] = super == "object" ? std::set<std::string>{} : std::set<std::string>{"object"};
      }
    }
  }
  SubtypeGraph g;
  g.ancestors_.clear();
  for (const auto& [type, _] : parents) {
    std::set<std::string>& reach = g.ancestors_[type];
    std::vector<std::string> stack{type};
    while (!stack.empty()) {
      std::string cur = std::move(stack.back());
      stack.pop_back();
      if (!reach.insert(cur).second) {
        continue;
      }
      for (const auto& p : parents[cur]) {
        stack.push_back(p);
      }
    }
  }
  return g;
}

bool SubtypeGraph::is_subtype(const std::string& sub, const std::string& super) const {
  auto it = ancestors_.find(sub);
  return it != ancestors_.end() && it->second.count(super) != 0;
}

std::vector<std::string> SubtypeGraph::unrooted() const {
  std::vector<std::string> out;
  for (const auto& [type, reach] : ancestors_) {
    if (!reach.count("object")) {
      out.push_back(type);
    }
  }
  return out;
}

std::vector<std::string> SubtypeGraph::types() const {
  std::vector<std::string> out;
  for (const auto& [type, _] : ancestors_) {
    out.push_back(type);
  }
  return out;
}

bool of_type(const EitherType& arg, const EitherType& param, const SubtypeGraph& graph) {
  for (const auto* side : {&arg, &param}) {
    for (const auto& t : *side) {
      if (!graph.declared(t)) {
        throw WfException({WfError::Category::UndeclaredName, t, "type", {}});
      }
    }
  }
  return std::all_of(arg.begin(), arg.end(), [&](const std::string& a) {
    return std::any_of(param.begin(), param.end(), [&](const std::string& p) { return graph.is_subtype(a, p); });
  });
}

FunctionTable function_table(const ProblemAst& problem) {
  FunctionTable table;
  for (const auto& fa : problem.init_functions) {
    GroundAtom key{fa.term.name, {}};
    for (const auto& arg : fa.term.args) {
      key.args.push_back(arg.name);
    }
    table.emplace(std::move(key), fa.value);
  }
  return table;
}

// ---------------------------------------------------------------------------

namespace {

using Category = WfError::Category;

std::string type_text(const EitherType& t) {
  if (t.size() == 1) {
    return t.front();
  }
  std::string out = "(either";
  for (const auto& s : t) {
    out += " " + s;
  }
  return out + ")";
}

/// Names visible while checking one file: types, predicates, functions,
/// objects/constants and (inside a schema) its parameters.
class Checker {
 public:
  Checker(const DomainAst& domain, std::vector<WfError>& errors)
      : domain_(domain), graph_(SubtypeGraph::build(domain)), errors_(errors) {
    for (const auto& p : domain.predicates) {
      predicates_.emplace(p.name, &p);
    }
    for (const auto& f : domain.functions) {
      functions_.emplace(f.name, &f);
    }
    for (const auto& c : domain.constants) {
      objects_.emplace(c.name, c.type);
    }
  }

  void add_objects(const std::vector<TypedName>& objects, const std::string& context) {
    for (const auto& o : objects) {
      check_type_declared(o.type, context, o.pos);
      if (!objects_.emplace(o.name, o.type).second) {
        report(Category::DuplicateDefinition, o.name, context, o.pos);
      }
    }
  }

  void report(Category c, std::string name, std::string context, SourcePos pos) {
    errors_.push_back({c, std::move(name), std::move(context), pos});
  }

  bool check_type_declared(const EitherType& type, const std::string& context, SourcePos pos) {
    bool ok = true;
    for (const auto& t : type) {
      if (!graph_.declared(t)) {
        report(Category::UndeclaredName, t, context, pos);
        ok = false;
      }
    }
    return ok;
  }

  void check_domain() {
    std::set<std::string> seen;
    for (const auto& t : domain_.types) {
      if (!seen.insert(t.name).second) {
        report(Category::DuplicateDefinition, t.name, "types", t.pos);
      }
    }
    for (const auto& t : graph_.unrooted()) {
      report(Category::TypeMismatch, t, "types (does not reach object)", {});
    }
    std::set<std::string> constants;
    for (const auto& c : domain_.constants) {
      check_type_declared(c.type, "constants", c.pos);
      if (!constants.insert(c.name).second) {
        report(Category::DuplicateDefinition, c.name, "constants", c.pos);
      }
    }
    check_signatures(domain_.predicates, "predicates");
    check_signatures(domain_.functions, "functions");
    std::set<std::string> schema_names;
    for (const auto& s : domain_.schemata) {
      if (!schema_names.insert(s.name).second) {
        report(Category::DuplicateDefinition, s.name, "domain", s.pos);
      }
      check_schema(s);
    }
  }

  void check_signatures(const std::vector<PredicateDecl>& decls, const std::string& context) {
    std::set<std::string> names;
    for (const auto& d : decls) {
      if (!names.insert(d.name).second) {
        report(Category::DuplicateDefinition, d.name, context, d.pos);
      }
      std::set<std::string> params;
      for (const auto& p : d.parameters) {
        check_type_declared(p.type, context + " " + d.name, p.pos);
        if (!params.insert(p.name).second) {
          report(Category::DuplicateDefinition, "?" + p.name, context + " " + d.name, p.pos);
        }
      }
    }
  }

  void check_schema(const ActionSchemaAst& s) {
    const std::string context = "action " + s.name;
    std::map<std::string, EitherType> params;
    for (const auto& p : s.parameters) {
      check_type_declared(p.type, context, p.pos);
      if (!params.emplace(p.name, p.type).second) {
        report(Category::DuplicateDefinition, "?" + p.name, context, p.pos);
      }
    }
    for (const auto& c : s.conditions) {
      check_formula(c.formula, params, context);
    }
    for (const auto& e : s.effects) {
      check_atom(e.literal.atom, params, context);
    }
    check_duration_terms(s.duration, params, context);
  }

  void check_duration_terms(const DurationConstraint& c, const std::map<std::string, EitherType>& params,
                            const std::string& context) {
    for (const auto& part : c.parts) {
      check_duration_terms(part, params, context);
    }
    if (c.rhs.function) {
      check_function_term(*c.rhs.function, params, context);
    }
  }

  void check_function_term(const FunctionTermAst& term, const std::map<std::string, EitherType>& params,
                           const std::string& context) {
    auto it = functions_.find(term.name);
    if (it == functions_.end()) {
      report(Category::UndeclaredName, term.name, context, term.pos);
      return;
    }
    check_args(term.name, term.args, it->second->parameters, params, context, term.pos);
  }

  void check_formula(const FormulaAst& f, const std::map<std::string, EitherType>& params,
                     const std::string& context) {
    if (f.kind == FormulaAst::Kind::Atom) {
      check_atom(f.atom, params, context);
    }
    for (const auto& c : f.children) {
      check_formula(c, params, context);
    }
  }

  void check_atom(const AtomAst& atom, const std::map<std::string, EitherType>& params, const std::string& context) {
    if (atom.is_equality) {
      for (const auto& arg : atom.args) {
        term_type(arg, params, context);
      }
      return;
    }
    auto it = predicates_.find(atom.predicate);
    if (it == predicates_.end()) {
      report(Category::UndeclaredName, atom.predicate, context, atom.pos);
      return;
    }
    check_args(atom.predicate, atom.args, it->second->parameters, params, context, atom.pos);
  }

  void check_args(const std::string& name, const std::vector<Term>& args, const std::vector<TypedName>& signature,
                  const std::map<std::string, EitherType>& params, const std::string& context, SourcePos pos) {
    if (args.size() != signature.size()) {
      report(Category::ArityMismatch, name, context + " (expected " + std::to_string(signature.size()) +
                                                " argument(s), got " + std::to_string(args.size()) + ")",
             pos);
      return;
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      const EitherType* type = term_type(args[i], params, context);
      if (type == nullptr) {
        continue;
      }
      try {
        if (!of_type(*type, signature[i].type, graph_)) {
          report(Category::TypeMismatch, args[i].name,
                 context + " (" + type_text(*type) + " where " + type_text(signature[i].type) + " expected in " +
                     name + ")",
                 args[i].pos);
        }
      } catch (const WfException&) {
        // Undeclared types were already reported at their declaration.
      }
    }
  }

  const EitherType* term_type(const Term& term, const std::map<std::string, EitherType>& params,
                              const std::string& context) {
    if (term.is_variable) {
      auto it = params.find(term.name);
      if (it == params.end()) {
        report(Category::UndeclaredName, "?" + term.name, context, term.pos);
        return nullptr;
      }
      return &it->second;
    }
    auto it = objects_.find(term.name);
    if (it == objects_.end()) {
      report(Category::UndeclaredName, term.name, context, term.pos);
      return nullptr;
    }
    return &it->second;
  }

  void check_problem(const ProblemAst& problem) {
    add_objects(problem.objects, "objects");
    static const std::map<std::string, EitherType> kNoParams;
    for (const auto& atom : problem.init_atoms) {
      check_atom(atom, kNoParams, "init");
    }
    std::set<GroundAtom> assigned;
    for (const auto& fa : problem.init_functions) {
      check_function_term(fa.term, kNoParams, "init");
      GroundAtom key{fa.term.name, {}};
      for (const auto& arg : fa.term.args) {
        key.args.push_back(arg.name);
      }
      if (!assigned.insert(key).second) {
        report(Category::DuplicateDefinition, to_string(key), "init", fa.pos);
      }
    }
    check_formula(problem.goal, kNoParams, "goal");
  }

  void check_steps(const PlanAst& plan, const FunctionTable& functions) {
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
      const PlanStep& step = plan.steps[i];
      const std::string context = "plan step " + std::to_string(i + 1);
      const ActionSchemaAst* schema = domain_.find_schema(step.action);
      if (schema == nullptr) {
        report(Category::UndeclaredName, step.action, context, step.pos);
        continue;
      }
      if (step.args.size() != schema->parameters.size()) {
        report(Category::ArityMismatch, step.action,
               context + " (expected " + std::to_string(schema->parameters.size()) + " argument(s), got " +
                   std::to_string(step.args.size()) + ")",
               step.pos);
        continue;
      }
      bool args_ok = true;
      for (std::size_t k = 0; k < step.args.size(); ++k) {
        auto it = objects_.find(step.args[k]);
        if (it == objects_.end()) {
          report(Category::UndeclaredName, step.args[k], context, step.pos);
          args_ok = false;
          continue;
        }
        try {
          if (!of_type(it->second, schema->parameters[k].type, graph_)) {
            report(Category::TypeMismatch, step.args[k],
                   context + " (" + type_text(it->second) + " where " + type_text(schema->parameters[k].type) +
                       " expected)",
                   step.pos);
            args_ok = false;
          }
        } catch (const WfException&) {
          args_ok = false;
        }
      }
      if (schema->durative != step.duration.has_value()) {
        report(Category::DurationViolation, step.action,
               context + (schema->durative ? " (durative action needs a [duration])"
                                           : " (instantaneous action takes no duration)"),
               step.pos);
        continue;
      }
      if (schema->durative && args_ok) {
        if (auto err = tempval::check_duration(*schema, step.args, *step.duration, functions)) {
          err->context = context + ": " + err->context;
          err->pos = step.pos;
          errors_.push_back(std::move(*err));
        }
      }
    }
  }

 private:
  const DomainAst& domain_;
  SubtypeGraph graph_;
  std::vector<WfError>& errors_;
  std::map<std::string, const PredicateDecl*> predicates_;
  std::map<std::string, const PredicateDecl*> functions_;
  std::map<std::string, EitherType> objects_;
};

struct DurationEval {
  const ActionSchemaAst& schema;
  const std::vector<std::string>& args;
  const FunctionTable& functions;

  Rational value(const DurationExpr& e) const {
    if (e.literal) {
      return *e.literal;
    }
    GroundAtom key{e.function->name, {}};
    for (const auto& term : e.function->args) {
      if (!term.is_variable) {
        key.args.push_back(term.name);
        continue;
      }
      auto it = std::find_if(schema.parameters.begin(), schema.parameters.end(),
                             [&](const TypedName& p) { return p.name == term.name; });
      if (it == schema.parameters.end()) {
        throw WfException({Category::UndeclaredName, "?" + term.name, "duration of " + schema.name, term.pos});
      }
      key.args.push_back(args.at(static_cast<std::size_t>(it - schema.parameters.begin())));
    }
    auto it = functions.find(key);
    if (it == functions.end()) {
      throw WfException({Category::UndefinedFunctionValue, to_string(key), "duration of " + schema.name,
                         e.function->pos});
    }
    return it->second;
  }

  bool holds(const DurationConstraint& c, const Rational& d) const {
    using Kind = DurationConstraint::Kind;
    switch (c.kind) {
      case Kind::None:
        return true;
      case Kind::Eq:
        return d == value(c.rhs);
      case Kind::Leq:
        return d <= value(c.rhs);
      case Kind::Geq:
        return d >= value(c.rhs);
      case Kind::Conj:
        return std::all_of(c.parts.begin(), c.parts.end(), [&](const auto& p) { return holds(p, d); });
    }
    return false;
  }
};

}  // namespace

std::vector<WfError> check_domain(const DomainAst& domain) {
  std::vector<WfError> errors;
  Checker(domain, errors).check_domain();
  return errors;
}

std::vector<WfError> check_problem(const DomainAst& domain, const ProblemAst& problem) {
  std::vector<WfError> errors;
  Checker(domain, errors).check_problem(problem);
  return errors;
}

std::optional<WfError> check_duration(const ActionSchemaAst& schema, const std::vector<std::string>& args,
                                      const Rational& duration, const FunctionTable& functions) {
  if (args.size() != schema.parameters.size()) {
    return WfError{Category::ArityMismatch, schema.name, "duration check", schema.pos};
  }
  try {
    if (!DurationEval{schema, args, functions}.holds(schema.duration, duration)) {
      return WfError{Category::DurationViolation, schema.name,
                     "duration " + duration.to_string() + " violates the duration constraint", schema.duration.pos};
    }
  } catch (const WfException& e) {
    return e.error();
  }
  return std::nullopt;
}

std::vector<WfError> check_plan_steps(const DomainAst& domain, const ProblemAst& problem, const PlanAst& plan) {
  std::vector<WfError> errors;
  Checker steps(domain, errors);
  steps.add_objects(problem.objects, "objects");
  // Object errors belong to check_problem.
  errors.clear();
  steps.check_steps(plan, function_table(problem));
  return errors;
}

}  // namespace tempval
