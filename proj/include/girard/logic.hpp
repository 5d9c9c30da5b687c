#ifndef GIRARD_LOGIC_HPP
#define GIRARD_LOGIC_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "girard/budget.hpp"
#include "girard/construction.hpp"
#include "girard/quantale.hpp"

namespace girard {

/// Multiplicative formulas: atoms, tensor, par, negation, the units 1 and
/// bot, and the lattice constants 0 and top.
struct Formula {
  enum class Kind { Atom, Tensor, Par, Neg, One, Bottom, Zero, Top };
  Kind kind = Kind::One;
  std::string atom;
  std::unique_ptr<Formula> lhs, rhs;

  Formula() = default;
  Formula(Formula&&) = default;
  Formula& operator=(Formula&&) = default;
  Formula clone() const;
  bool operator==(const Formula& other) const;
};

struct ParseError : std::invalid_argument {
  size_t column;  ///< 1-based byte offset of the offending token
  ParseError(const std::string& msg, size_t col)
      : std::invalid_argument(msg + " at column " + std::to_string(col)),
        column(col) {}
};

/// Grammar: atoms [a-z][a-z0-9]*; prefix ~ or postfix ^ negate; * is tensor,
/// | is par; literals 1, bot, 0, top; parentheses. Precedence ~ > * > |,
/// with * and | left-associative. The unicode connectives for tensor and par
/// are accepted as aliases.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesis printer; parse(print(f)) reproduces f.
std::string print_formula(const Formula& f);

std::vector<std::string> collect_atoms(const Formula& f);

/// A Girard quantale used as a model: a designated unit (for validity) and
/// cyclic dualizing element, with the negation table precomputed.
struct LogicModel {
  Quantale q;
  int unit;
  int dualizer;
  std::vector<int> perp;

  LogicModel(Quantale quantale, int dualizing);
  static LogicModel from_girard(const GirardQuantale& g);
};

using Valuation = std::map<std::string, int>;

/// tensor -> multiplication, par -> (b^ a^)^, neg -> perp, 1 -> e, bot -> d,
/// 0 -> bottom, top -> top. Throws when an atom has no assignment.
int eval_formula(const Formula& f, const LogicModel& m, const Valuation& v);

/// e <= [[f]] under the given valuation.
bool is_valid(const Formula& f, const LogicModel& m, const Valuation& v);

struct TautologyResult {
  bool tautology = true;
  std::optional<Valuation> counterexample;
};

/// Exhaustive check over all |model|^#atoms valuations, budgeted.
TautologyResult is_tautology(const Formula& f, const LogicModel& m,
                             const Budget& budget = {});

}  // namespace girard

#endif
