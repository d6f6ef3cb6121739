#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "fitset/group.hpp"

namespace fitset {

/// Abstract group-class expressions. Primitives: triv, all, nil, sol,
/// p(q) (q-groups), p'(q) (q'-groups), sp'(q) (soluble q'-groups).
/// Combinators: prod(X,Y) (G in X*Y iff G/G_X in Y), meet(X,Y),
/// pow(nil,k). Membership is evaluated on concrete groups.
enum class ClassKind {
  Triv,
  All,
  Nil,
  Sol,
  PGroup,
  PPrime,
  SolPPrime,
  Prod,
  Meet,
  NilPow,
};

struct ClassExpr;
using ClassExprPtr = std::shared_ptr<const ClassExpr>;

struct ClassExpr {
  ClassKind kind;
  int prime = 0;  // PGroup / PPrime / SolPPrime
  int power = 0;  // NilPow
  ClassExprPtr left, right;

  // Conservative per-node flags. Every shape in the grammar is a Fitting
  // class; the formation flag is set only for the audited shapes
  // (primitives, their meets, and prod(p'(q),p(q))).
  bool fitting = true;
  bool formation = false;

  std::string text;  // canonical rendering

  bool same_as(const ClassExpr& o) const { return text == o.text; }
};

ClassExprPtr class_triv();
ClassExprPtr class_all();
ClassExprPtr class_nil();
ClassExprPtr class_sol();
ClassExprPtr class_pgroup(int p);
ClassExprPtr class_pprime(int p);
ClassExprPtr class_sol_pprime(int p);
ClassExprPtr class_prod(ClassExprPtr x, ClassExprPtr y);
ClassExprPtr class_meet(ClassExprPtr x, ClassExprPtr y);
ClassExprPtr class_nil_pow(int k);

/// Grammar (ASCII):
///   expr := "triv" | "all" | "nil" | "sol" | "p(" prime ")"
///         | "p'(" prime ")" | "sp'(" prime ")"
///         | "prod(" expr "," expr ")" | "meet(" expr "," expr ")"
///         | "pow(nil," int ")"
/// Throws InputError with the offending position.
ClassExprPtr parse_classexpr(std::string_view text);

/// G in X. Refuses non-Fitting shapes (InputError).
bool class_member(const FiniteGroup& G, const ClassExpr& X);

/// G_X: join of all normal X-subgroups. Refuses non-Fitting shapes.
/// Throws ConsistencyError if the join is not itself an X-member
/// (tripwire: would mean X is not a Fitting class).
ElemMask class_radical_mask(const FiniteGroup& G, const ClassExpr& X);

/// G^X: intersection of all normal N with G/N in X. Refuses
/// non-formation shapes; ConsistencyError if G/result fails membership.
ElemMask class_residual_mask(const FiniteGroup& G, const ClassExpr& X);

/// Hand-audited inclusion whitelist between class expressions
/// (sound, not complete).
bool known_subclass(const ClassExpr& X, const ClassExpr& Y);

/// Audited quotient-closed shapes: nil, sol, p(q), p'(q), all, and
/// prod(p'(q),p(q)).
bool known_quotient_closed(const ClassExpr& X);

}  // namespace fitset
