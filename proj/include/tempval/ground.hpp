#pragma once

// Ground propositional layer: atoms, formulas, snap actions and durative
// actions. All types are immutable values with a total order so they can be
// kept in ordered sets.

#include <compare>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace tempval {

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  friend bool operator==(const GroundAtom&, const GroundAtom&) = default;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

/// "(el-at e0 f0)"
std::string to_string(const GroundAtom& atom);

using AtomSet = std::set<GroundAtom>;

/// Propositional formula: Top | Atom | Not | And | Or. Shares subtrees.
class Formula {
 public:
  enum class Kind { Top, Atom, Not, And, Or };

  Formula();  // Top

  static Formula top();
  static Formula bottom();  // Not(Top)
  static Formula atom(GroundAtom atom);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  /// Right-nested conjunction; Top for an empty list, the element for one.
  static Formula conjunction_of(const std::vector<Formula>& parts);
  static Formula disjunction_of(const std::vector<Formula>& parts);

  Kind kind() const;
  const GroundAtom& atom() const;  // Kind::Atom
  const Formula& operand() const;  // Kind::Not
  const Formula& lhs() const;      // Kind::And / Kind::Or
  const Formula& rhs() const;

  bool is_top() const { return kind() == Kind::Top; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

AtomSet atoms(const Formula& f);
std::string to_string(const Formula& f);

/// Instantaneous action ⟨pre, add, del⟩.
struct SnapAction {
  Formula pre;
  AtomSet add;
  AtomSet del;

  friend bool operator==(const SnapAction&, const SnapAction&) = default;
  friend std::strong_ordering operator<=>(const SnapAction& a, const SnapAction& b);
};

std::string to_string(const SnapAction& a);

/// Durative action ⟨start, end, inv⟩.
struct GroundDurativeAction {
  SnapAction start;
  SnapAction end;
  Formula inv;

  friend bool operator==(const GroundDurativeAction&, const GroundDurativeAction&) = default;
};

/// ⟨inv, ∅, ∅⟩
SnapAction invariant_as_snap(const GroundDurativeAction& a);

using State = AtomSet;

/// Ground planning problem ⟨P, δ, I, G⟩. `actions` holds the distinct ground
/// actions of the plan being checked.
struct GroundProblem {
  AtomSet atoms;
  std::vector<std::variant<GroundDurativeAction, SnapAction>> actions;
  State init;
  Formula goal;
};

}  // namespace tempval
