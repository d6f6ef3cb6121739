#include "fitset/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "fitset/catalog.hpp"
#include "fitset/error.hpp"

namespace fitset {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  std::string s = pos == std::string::npos ? line : line.substr(0, pos);
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupPtr load_group_file(const std::string& path, int order_bound) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file " + path);

  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos)
    name = name.substr(slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos)
    name = name.substr(0, dot);

  int degree = -1, order = -1;
  std::vector<Perm> gens;
  std::vector<std::vector<int>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    auto where = [&] { return path + ":" + std::to_string(lineno); };
    if (kw == "degree") {
      if (degree >= 0 || order >= 0)
        throw InputError(where() + ": duplicate or mixed header line");
      if (!(ls >> degree) || degree <= 0)
        throw InputError(where() + ": degree needs a positive integer");
    } else if (kw == "order") {
      if (degree >= 0 || order >= 0)
        throw InputError(where() + ": duplicate or mixed header line");
      if (!(ls >> order) || order <= 0)
        throw InputError(where() + ": order needs a positive integer");
    } else if (kw == "gen") {
      if (degree < 0)
        throw InputError(where() + ": gen line before a degree line");
      std::string rest;
      std::getline(ls, rest);
      gens.push_back(Perm::parse(rest, degree));
    } else if (kw == "row") {
      if (order < 0)
        throw InputError(where() + ": row line before an order line");
      std::vector<int> row;
      int x;
      while (ls >> x) row.push_back(x);
      if (static_cast<int>(row.size()) != order)
        throw InputError(where() + ": row has " +
                         std::to_string(row.size()) + " entries, expected " +
                         std::to_string(order));
      rows.push_back(std::move(row));
    } else {
      throw InputError(where() + ": unknown directive \"" + kw + "\"");
    }
  }
  if (degree >= 0) {
    if (gens.empty())
      throw InputError(path + ": degree form needs at least one gen line");
    return FiniteGroup::from_generators(degree, gens, order_bound, name);
  }
  if (order >= 0) {
    if (static_cast<int>(rows.size()) != order)
      throw InputError(path + ": expected " + std::to_string(order) +
                       " row lines, got " + std::to_string(rows.size()));
    return FiniteGroup::from_table(rows, order_bound, name);
  }
  throw InputError(path + ": missing degree/order header line");
}

GroupPtr resolve_group(const std::string& ref, int order_bound) {
  if (ref.rfind("catalog:", 0) == 0) {
    GroupPtr g = catalog_group(ref.substr(8));
    if (g->order() > order_bound)
      throw InputError("catalog group " + ref.substr(8) +
                       " exceeds the order bound " +
                       std::to_string(order_bound));
    return g;
  }
  if (ref.rfind("file:", 0) == 0)
    return load_group_file(ref.substr(5), order_bound);
  throw InputError("group reference \"" + ref +
                   "\" must start with catalog: or file:");
}

// --- fitting-set spec grammar ----------------------------------------------

namespace {

struct FitsetParser {
  std::string_view s;
  size_t i = 0;
  LatticePtr lat;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("fitset spec error at position " + std::to_string(i) +
                     ": " + msg + " in \"" + std::string(s) + "\"");
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
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    ++i;
  }

  // Substring up to the ')' closing the already-consumed '(' at nesting
  // depth zero; consumes the ')'.
  std::string_view balanced_to_paren() {
    size_t start = i;
    int depth = 0;
    for (; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') {
        if (depth == 0) {
          std::string_view inner = s.substr(start, i - start);
          ++i;
          return inner;
        }
        --depth;
      }
    }
    fail("unbalanced parentheses");
  }

  FittingSet parse() {
    ws();
    if (eat("trivial")) return trivial_fitset(lat);
    if (eat("trace(")) {
      auto inner = balanced_to_paren();
      return trace(lat, parse_classexpr(inner));
    }
    if (eat("closure{")) {
      IdSet seed(lat->size());
      if (!lat->group()->has_perms())
        fail("closure specs need a group with a permutation representation");
      for (;;) {
        seed.set(parse_seed_subgroup());
        ws();
        if (i < s.size() && s[i] == ';') {
          ++i;
          continue;
        }
        break;
      }
      expect('}');
      return fitset_closure(lat, seed);
    }
    if (eat("meet(")) {
      FittingSet a = parse();
      expect(',');
      FittingSet b = parse();
      expect(')');
      return set_intersection(a, b);
    }
    if (eat("oprod(")) {
      FittingSet f = parse();
      expect(',');
      ClassExprPtr x = parse_classexpr(balanced_to_paren());
      return set_product(f, x);
    }
    fail("expected a fitset expression");
  }

  // one ','-separated cycle-string generator list; returns the id of the
  // generated subgroup
  int parse_seed_subgroup() {
    const FiniteGroup& G = *lat->group();
    ElemMask seed(G.order());
    for (;;) {
      ws();
      size_t start = i;
      // a cycle string is a run of '(...)' groups
      while (i < s.size() && s[i] == '(') {
        while (i < s.size() && s[i] != ')') ++i;
        if (i >= s.size()) fail("unclosed cycle");
        ++i;
        ws();
      }
      if (i == start) fail("expected a cycle-notation generator");
      Perm p = Perm::parse(s.substr(start, i - start), G.degree());
      int elem = -1;
      for (int x = 0; x < G.order() && elem < 0; ++x)
        if (G.perm_of(x) == p) elem = x;
      if (elem < 0)
        fail("permutation " + p.cycle_string() +
             " is not an element of the group");
      seed.set(elem);
      ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    return lat->generated(seed);
  }
};

}  // namespace

FittingSet parse_fitset_spec(std::string_view text, LatticePtr lat) {
  FitsetParser p{text, 0, std::move(lat)};
  FittingSet f = p.parse();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return f;
}

// --- h-function formats ------------------------------------------------------

namespace {

// top-level split on `sep`, ignoring separators inside () and {}
std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_prime_token(const std::string& tok, const std::string& where) {
  size_t pos = 0;
  int p = 0;
  while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
    ++pos;
  size_t digits = 0;
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
    p = p * 10 + (tok[pos++] - '0');
    ++digits;
  }
  while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
    ++pos;
  if (digits == 0 || pos != tok.size())
    throw InputError(where + ": expected a prime, got \"" + tok + "\"");
  return p;
}

}  // namespace

HFunction parse_hfunction_file(const std::string& path, LatticePtr lat) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open h-function file " + path);
  std::map<int, FittingSet> assign;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::string where = path + ":" + std::to_string(lineno);
    if (s.rfind("p ", 0) != 0)
      throw InputError(where + ": expected \"p <prime> := <fitset>\"");
    auto assign_pos = s.find(":=");
    if (assign_pos == std::string::npos)
      throw InputError(where + ": missing \":=\"");
    int p = parse_prime_token(s.substr(2, assign_pos - 2), where);
    FittingSet f = parse_fitset_spec(s.substr(assign_pos + 2), lat);
    if (!assign.emplace(p, std::move(f)).second)
      throw InputError(where + ": duplicate prime " + std::to_string(p));
  }
  return HFunction::make(std::move(lat), std::move(assign));
}

HFunction parse_hfunction_inline(std::string_view text, LatticePtr lat) {
  std::map<int, FittingSet> assign;
  for (const std::string& part : split_top_level(text, ';')) {
    if (strip_comment(part).empty()) continue;
    auto assign_pos = part.find(":=");
    if (assign_pos == std::string::npos)
      throw InputError("h-function entry \"" + part + "\" is missing \":=\"");
    int p = parse_prime_token(part.substr(0, assign_pos), "inline h-function");
    FittingSet f = parse_fitset_spec(part.substr(assign_pos + 2), lat);
    if (!assign.emplace(p, std::move(f)).second)
      throw InputError("inline h-function repeats prime " + std::to_string(p));
  }
  return HFunction::make(std::move(lat), std::move(assign));
}

}  // namespace fitset
