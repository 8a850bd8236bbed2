#include "tempval/ground.hpp"

#include <stdexcept>

namespace tempval {

struct Formula::Node {
  Kind kind = Kind::Top;
  GroundAtom atom;
  std::vector<Formula> children;
};

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>();
  return Formula(node);
}

Formula Formula::bottom() { return negation(top()); }

Formula Formula::atom(GroundAtom a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->atom = std::move(a);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->children.push_back(std::move(f));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::conjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) {
    return top();
  }
  Formula out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
    out = conjunction(*it, out);
  }
  return out;
}

Formula Formula::disjunction_of(const std::vector<Formula>& parts) {
  if (parts.empty()) {
    return bottom();
  }
  Formula out = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
    out = disjunction(*it, out);
  }
  return out;
}

Formula::Kind Formula::kind() const { return node_->kind; }

const GroundAtom& Formula::atom() const {
  if (node_->kind != Kind::Atom) {
    throw std::logic_error("Formula::atom on non-atom");
  }
  return node_->atom;
}

const Formula& Formula::operand() const {
  if (node_->kind != Kind::Not) {
    throw std::logic_error("Formula::operand on non-negation");
  }
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (node_->children.size() != 2) {
    throw std::logic_error("Formula::lhs on non-binary formula");
  }
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (node_->children.size() != 2) {
    throw std::logic_error("Formula::rhs on non-binary formula");
  }
  return node_->children[1];
}

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) {
    return std::strong_ordering::equal;
  }
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) {
    return c;
  }
  if (a.node_->kind == Formula::Kind::Atom) {
    return a.node_->atom <=> b.node_->atom;
  }
  // Same kind, so the same number of children.
  for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
    if (auto c = a.node_->children[i] <=> b.node_->children[i]; c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

namespace {

void collect_atoms(const Formula& f, AtomSet& out) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return;
    case Formula::Kind::Atom:
      out.insert(f.atom());
      return;
    case Formula::Kind::Not:
      collect_atoms(f.operand(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
  }
}

std::string atom_set_string(const AtomSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : s) {
    out += (first ? "" : ", ") + to_string(a);
    first = false;
  }
  return out + "}";
}

}  // namespace

AtomSet atoms(const Formula& f) {
  AtomSet out;
  collect_atoms(f, out);
  return out;
}

std::string to_string(const GroundAtom& atom) {
  std::string out = "(" + atom.predicate;
  for (const auto& arg : atom.args) {
    out += " " + arg;
  }
  return out + ")";
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return "T";
    case Formula::Kind::Atom:
      return to_string(f.atom());
    case Formula::Kind::Not:
      return "(not " + to_string(f.operand()) + ")";
    case Formula::Kind::And:
      return "(and " + to_string(f.lhs()) + " " + to_string(f.rhs()) + ")";
    case Formula::Kind::Or:
      return "(or " + to_string(f.lhs()) + " " + to_string(f.rhs()) + ")";
  }
  return "?";
}

std::strong_ordering operator<=>(const SnapAction& a, const SnapAction& b) {
  if (auto c = a.pre <=> b.pre; c != 0) {
    return c;
  }
  if (auto c = a.add <=> b.add; c != 0) {
    return c;
  }
  return a.del <=> b.del;
}

std::string to_string(const SnapAction& a) {
  return "<" + to_string(a.pre) + ", " + atom_set_string(a.add) + ", " + atom_set_string(a.del) + ">";
}

SnapAction invariant_as_snap(const GroundDurativeAction& a) { return SnapAction{a.inv, {}, {}}; }

}  // namespace tempval
