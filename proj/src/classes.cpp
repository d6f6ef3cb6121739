#include "fitset/classes.hpp"

#include <cctype>

#include "fitset/error.hpp"

namespace fitset {

namespace {

ClassExprPtr make_prim(ClassKind kind, std::string text, int prime = 0) {
  auto e = std::make_shared<ClassExpr>();
  e->kind = kind;
  e->prime = prime;
  e->fitting = true;
  e->formation = true;
  e->text = std::move(text);
  return e;
}

void require_prime(int p) {
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not a prime");
}

}  // namespace

ClassExprPtr class_triv() { return make_prim(ClassKind::Triv, "triv"); }
ClassExprPtr class_all() { return make_prim(ClassKind::All, "all"); }
ClassExprPtr class_nil() { return make_prim(ClassKind::Nil, "nil"); }
ClassExprPtr class_sol() { return make_prim(ClassKind::Sol, "sol"); }

ClassExprPtr class_pgroup(int p) {
  require_prime(p);
  return make_prim(ClassKind::PGroup, "p(" + std::to_string(p) + ")", p);
}

ClassExprPtr class_pprime(int p) {
  require_prime(p);
  return make_prim(ClassKind::PPrime, "p'(" + std::to_string(p) + ")", p);
}

ClassExprPtr class_sol_pprime(int p) {
  require_prime(p);
  return make_prim(ClassKind::SolPPrime, "sp'(" + std::to_string(p) + ")", p);
}

ClassExprPtr class_prod(ClassExprPtr x, ClassExprPtr y) {
  auto e = std::make_shared<ClassExpr>();
  e->kind = ClassKind::Prod;
  e->left = std::move(x);
  e->right = std::move(y);
  e->fitting = e->left->fitting && e->right->fitting;
  // the only audited product formation: p'(q) * p(q)
  e->formation = e->left->kind == ClassKind::PPrime &&
                 e->right->kind == ClassKind::PGroup &&
                 e->left->prime == e->right->prime;
  e->text = "prod(" + e->left->text + "," + e->right->text + ")";
  return e;
}

ClassExprPtr class_meet(ClassExprPtr x, ClassExprPtr y) {
  auto e = std::make_shared<ClassExpr>();
  e->kind = ClassKind::Meet;
  e->left = std::move(x);
  e->right = std::move(y);
  e->fitting = e->left->fitting && e->right->fitting;
  e->formation = e->left->formation && e->right->formation;
  e->text = "meet(" + e->left->text + "," + e->right->text + ")";
  return e;
}

ClassExprPtr class_nil_pow(int k) {
  if (k < 1) throw InputError("pow(nil,k) needs k >= 1");
  auto e = std::make_shared<ClassExpr>();
  e->kind = ClassKind::NilPow;
  e->power = k;
  e->fitting = true;
  e->formation = false;  // conservative
  e->text = "pow(nil," + std::to_string(k) + ")";
  return e;
}

// --- parser -----------------------------------------------------------------

namespace {

struct ClassParser {
  std::string_view s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("class expression error at position " +
                     std::to_string(i) + ": " + msg + " in \"" +
                     std::string(s) + "\"");
  }

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(std::string_view lit) {
    if (s.substr(i, lit.size()) == lit) {
      i += lit.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    ws();
    if (i >= s.size() || s[i] != c)
      fail(std::string("expected '") + c + "'");
    ++i;
  }

  int integer() {
    ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected an integer");
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  }

  ClassExprPtr expr() {
    ws();
    if (eat("prod(")) {
      auto x = expr();
      expect(',');
      auto y = expr();
      expect(')');
      return class_prod(std::move(x), std::move(y));
    }
    if (eat("meet(")) {
      auto x = expr();
      expect(',');
      auto y = expr();
      expect(')');
      return class_meet(std::move(x), std::move(y));
    }
    if (eat("pow(")) {
      ws();
      if (!eat("nil")) fail("pow only supports nil");
      expect(',');
      int k = integer();
      expect(')');
      return class_nil_pow(k);
    }
    if (eat("sp'(")) {
      int p = prime();
      expect(')');
      return class_sol_pprime(p);
    }
    if (eat("p'(")) {
      int p = prime();
      expect(')');
      return class_pprime(p);
    }
    if (eat("p(")) {
      int p = prime();
      expect(')');
      return class_pgroup(p);
    }
    if (eat("triv")) return class_triv();
    if (eat("all")) return class_all();
    if (eat("nil")) return class_nil();
    if (eat("sol")) return class_sol();
    fail("expected a class expression");
  }

  int prime() {
    size_t at = i;
    int p = integer();
    if (!is_prime(p)) {
      i = at;
      fail(std::to_string(p) + " is not a prime");
    }
    return p;
  }
};

}  // namespace

ClassExprPtr parse_classexpr(std::string_view text) {
  ClassParser p{text};
  auto e = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return e;
}

// --- evaluation ---------------------------------------------------------------

bool class_member(const FiniteGroup& G, const ClassExpr& X) {
  if (!X.fitting)
    throw InputError("membership refused: " + X.text +
                     " is not flagged as a Fitting class");
  switch (X.kind) {
    case ClassKind::Triv:
      return G.order() == 1;
    case ClassKind::All:
      return true;
    case ClassKind::Nil:
      return is_nilpotent(G);
    case ClassKind::Sol:
      return is_soluble(G);
    case ClassKind::PGroup:
      return G.order() == p_part(G.order(), X.prime);
    case ClassKind::PPrime:
      return G.order() % X.prime != 0;
    case ClassKind::SolPPrime:
      return G.order() % X.prime != 0 && is_soluble(G);
    case ClassKind::Meet:
      return class_member(G, *X.left) && class_member(G, *X.right);
    case ClassKind::Prod: {
      ElemMask rad = class_radical_mask(G, *X.left);
      GroupPtr Q = quotient_target(G, rad);
      return class_member(*Q, *X.right);
    }
    case ClassKind::NilPow: {
      // successive quotients by the nilpotent radical
      GroupPtr cur;  // keeps intermediate quotients alive
      const FiniteGroup* g = &G;
      for (int step = 0; step < X.power; ++step) {
        if (g->order() == 1) return true;
        ElemMask rad = class_radical_mask(*g, *class_nil());
        if (rad.count() == 1) return false;  // radical trivial, stuck
        cur = quotient_target(*g, rad);
        g = cur.get();
      }
      return g->order() == 1;
    }
  }
  throw ConsistencyError("unhandled class kind");
}

ElemMask class_radical_mask(const FiniteGroup& G, const ClassExpr& X) {
  if (!X.fitting)
    throw InputError("radical refused: " + X.text +
                     " is not flagged as a Fitting class");
  ElemMask rad(G.order());
  rad.set(0);
  for (const ElemMask& N : normal_subgroup_masks(G)) {
    if (N.subset_of(rad)) continue;
    if (class_member(*subgroup_as_group(G, N), X))
      rad = subgroup_closure(G, rad | N);
  }
  if (!class_member(*subgroup_as_group(G, rad), X))
    throw ConsistencyError("radical join is not a member of " + X.text +
                           " (shape is not a Fitting class)");
  return rad;
}

ElemMask class_residual_mask(const FiniteGroup& G, const ClassExpr& X) {
  if (!X.formation)
    throw InputError("residual refused: " + X.text +
                     " is not flagged as a formation");
  ElemMask res = Bitset::all(G.order());
  for (const ElemMask& N : normal_subgroup_masks(G)) {
    if (res.subset_of(N)) continue;
    if (class_member(*quotient_target(G, N), X)) res &= N;
  }
  if (!class_member(*quotient_target(G, res), X))
    throw ConsistencyError("quotient by residual is not a member of " +
                           X.text + " (shape is not a formation)");
  return res;
}

// --- audited inclusions ------------------------------------------------------

bool known_subclass(const ClassExpr& X, const ClassExpr& Y) {
  if (X.same_as(Y)) return true;
  if (X.kind == ClassKind::Triv) return true;  // every shape contains 1
  if (Y.kind == ClassKind::All) return true;
  if (Y.kind == ClassKind::Meet)
    return known_subclass(X, *Y.left) && known_subclass(X, *Y.right);
  if (X.kind == ClassKind::Meet)
    return known_subclass(*X.left, Y) || known_subclass(*X.right, Y);
  if (Y.kind == ClassKind::Prod) return known_subclass(X, *Y.left);

  switch (Y.kind) {
    case ClassKind::Sol:
      return X.kind == ClassKind::Nil || X.kind == ClassKind::PGroup ||
             X.kind == ClassKind::SolPPrime || X.kind == ClassKind::NilPow;
    case ClassKind::Nil:
      return X.kind == ClassKind::PGroup;
    case ClassKind::PPrime:
      return (X.kind == ClassKind::PGroup && X.prime != Y.prime) ||
             (X.kind == ClassKind::SolPPrime && X.prime == Y.prime);
    case ClassKind::SolPPrime:
      return X.kind == ClassKind::PGroup && X.prime != Y.prime;
    case ClassKind::NilPow:
      return X.kind == ClassKind::Nil || X.kind == ClassKind::PGroup ||
             (X.kind == ClassKind::NilPow && X.power <= Y.power);
    default:
      return false;
  }
}

bool known_quotient_closed(const ClassExpr& X) {
  switch (X.kind) {
    case ClassKind::Nil:
    case ClassKind::Sol:
    case ClassKind::PGroup:
    case ClassKind::PPrime:
    case ClassKind::All:
      return true;
    case ClassKind::Prod:
      return X.left->kind == ClassKind::PPrime &&
             X.right->kind == ClassKind::PGroup &&
             X.left->prime == X.right->prime;
    default:
      return false;
  }
}

}  // namespace fitset
