#include "gdlab/logic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "gdlab/enumerate.hpp"

namespace gdlab {

Fml f_var(std::string name) {
  return std::make_shared<Formula>(Formula{Formula::Var, std::move(name), nullptr, nullptr});
}
Fml f_top() { return std::make_shared<Formula>(Formula{Formula::Top, "", nullptr, nullptr}); }
Fml f_bot() { return std::make_shared<Formula>(Formula{Formula::Bot, "", nullptr, nullptr}); }
Fml f_and(Fml a, Fml b) {
  return std::make_shared<Formula>(Formula{Formula::And, "", std::move(a), std::move(b)});
}
Fml f_or(Fml a, Fml b) {
  return std::make_shared<Formula>(Formula{Formula::Or, "", std::move(a), std::move(b)});
}
Fml f_not(Fml a) {
  return std::make_shared<Formula>(Formula{Formula::Not, "", std::move(a), nullptr});
}

bool equal(const Fml& a, const Fml& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Var: return a->var == b->var;
    case Formula::Top:
    case Formula::Bot: return true;
    case Formula::Not: return equal(a->a, b->a);
    default: return equal(a->a, b->a) && equal(a->b, b->b);
  }
}

namespace {

int prec(Formula::Kind k) {
  switch (k) {
    case Formula::Or: return 1;
    case Formula::And: return 2;
    default: return 3;
  }
}

std::string print_at(const Fml& f, int outer) {
  std::string s;
  switch (f->kind) {
    case Formula::Var: s = f->var; break;
    case Formula::Top: s = "T"; break;
    case Formula::Bot: s = "F"; break;
    case Formula::Not: s = "~" + print_at(f->a, 3); break;
    case Formula::And: s = print_at(f->a, 2) + " & " + print_at(f->b, 3); break;
    case Formula::Or: s = print_at(f->a, 1) + " | " + print_at(f->b, 2); break;
  }
  if (prec(f->kind) < outer && (f->kind == Formula::And || f->kind == Formula::Or))
    s = "(" + s + ")";
  return s;
}

void collect_vars(const Fml& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Var: out.insert(f->var); break;
    case Formula::Not: collect_vars(f->a, out); break;
    case Formula::And:
    case Formula::Or:
      collect_vars(f->a, out);
      collect_vars(f->b, out);
      break;
    default: break;
  }
}

struct Parser {
  const std::string& text;
  size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& what) {
    throw Error("SyntaxError", what + " at position " + std::to_string(pos));
  }
  void skip() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c && !(c == '|' && pos + 1 < text.size() && text[pos + 1] == '-')) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_turnstile() {
    skip();
    if (pos + 1 < text.size() && text[pos] == '|' && text[pos + 1] == '-') {
      pos += 2;
      return true;
    }
    return false;
  }

  Fml atom() {
    skip();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Fml f = disj();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == '~') {
      ++pos;
      return f_not(atom());
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum((unsigned char)text[pos]) || text[pos] == '_'))
        ++pos;
      std::string id = text.substr(start, pos - start);
      if (id == "T") return f_top();
      if (id == "F") return f_bot();
      return f_var(id);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
  Fml conj() {
    Fml f = atom();
    while (eat('&')) f = f_and(f, atom());
    return f;
  }
  Fml disj() {
    Fml f = conj();
    while (eat('|')) f = f_or(f, conj());
    return f;
  }
};

}  // namespace

std::string to_string(const Fml& f) { return print_at(f, 0); }
std::string to_string(const Sequent& s) {
  return to_string(s.left) + " |- " + to_string(s.right);
}

std::vector<std::string> variables_of(const Fml& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return {s.begin(), s.end()};
}

Fml parse_formula(const std::string& text) {
  Parser p(text);
  Fml f = p.disj();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return f;
}

Sequent parse_sequent(const std::string& text) {
  Parser p(text);
  Fml l = p.disj();
  if (!p.eat_turnstile()) p.fail("expected '|-'");
  Fml r = p.disj();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return Sequent{l, r};
}

Interp interpret(const Frame& F, const std::map<std::string, Bits>& v, const Fml& f) {
  const Polarity& P = F.pol;
  Interp r;
  switch (f->kind) {
    case Formula::Var: {
      auto it = v.find(f->var);
      if (it == v.end()) throw Error("UnboundVariable", "no value for " + f->var);
      if (!P.stable(it->second))
        throw Error("InputError", "valuation of " + f->var + " is not stable");
      r.ext = it->second;
      r.co = P.prime_x(r.ext);
      break;
    }
    case Formula::Top:
      r.ext = P.xmask();
      r.co = P.prime_x(r.ext);
      break;
    case Formula::Bot:
      r.co = P.ymask();
      r.ext = P.prime_y(r.co);
      break;
    case Formula::And: {
      Interp a = interpret(F, v, f->a), b = interpret(F, v, f->b);
      r.ext = a.ext & b.ext;
      r.co = P.prime_x(r.ext);
      break;
    }
    case Formula::Or: {
      Interp a = interpret(F, v, f->a), b = interpret(F, v, f->b);
      r.co = a.co & b.co;
      r.ext = P.prime_y(r.co);
      break;
    }
    case Formula::Not: {
      Interp a = interpret(F, v, f->a);
      r.ext = star(F, a.ext);
      r.co = P.prime_x(r.ext);
      break;
    }
  }
  if (!P.stable(r.ext) || !P.costable(r.co) || r.co != P.prime_x(r.ext) ||
      r.ext != P.prime_y(r.co))
    throw Error("InternalError", "interpretation invariant broken at " + to_string(f));
  return r;
}

std::size_t max_valuations() {
  if (const char* e = std::getenv("GDLAB_MAX_VALUATIONS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) return (std::size_t)v;
  }
  return 1000000;
}

namespace {

void check_cap(std::size_t base, std::size_t k) {
  std::size_t cap = max_valuations(), total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / (base ? base : 1))
      throw Error("TooManyValuations", "valuation count exceeds the cap");
    total *= base;
  }
  if (total > cap) throw Error("TooManyValuations", "valuation count exceeds the cap");
}

int eval(const FiniteLattice& L, const std::map<std::string, int>& v, const Fml& f) {
  switch (f->kind) {
    case Formula::Var: {
      auto it = v.find(f->var);
      if (it == v.end()) throw Error("UnboundVariable", "no value for " + f->var);
      return it->second;
    }
    case Formula::Top: return L.top();
    case Formula::Bot: return L.bottom();
    case Formula::And: return L.meet(eval(L, v, f->a), eval(L, v, f->b));
    case Formula::Or: return L.join(eval(L, v, f->a), eval(L, v, f->b));
    case Formula::Not: return L.nu(eval(L, v, f->a));
  }
  throw Error("InternalError", "unreachable");
}

}  // namespace

AlgebraVerdict algebra_verdict(const FiniteLattice& L, const Sequent& s) {
  if (!L.has_nu()) throw Error("MissingNu", "algebra_valid needs nu");
  std::set<std::string> vs;
  collect_vars(s.left, vs);
  collect_vars(s.right, vs);
  std::vector<std::string> vars(vs.begin(), vs.end());
  check_cap((std::size_t)L.size(), vars.size());

  AlgebraVerdict out;
  std::vector<int> idx(vars.size(), 0);
  for (;;) {
    std::map<std::string, int> v;
    for (size_t i = 0; i < vars.size(); ++i) v[vars[i]] = idx[i];
    if (!L.leq(eval(L, v, s.left), eval(L, v, s.right))) {
      out.valid = false;
      for (size_t i = 0; i < vars.size(); ++i) out.witness.emplace_back(vars[i], idx[i]);
      return out;
    }
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == L.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

bool algebra_valid(const FiniteLattice& L, const Sequent& s) {
  return algebra_verdict(L, s).valid;
}

FrameVerdict frame_verdict(const Frame& F, const Sequent& s) {
  StableFamily fam = stable_family(F.pol);
  std::set<std::string> vs;
  collect_vars(s.left, vs);
  collect_vars(s.right, vs);
  std::vector<std::string> vars(vs.begin(), vs.end());
  check_cap(fam.stables.size(), vars.size());

  FrameVerdict out;
  std::vector<size_t> idx(vars.size(), 0);
  for (;;) {
    std::map<std::string, Bits> v;
    for (size_t i = 0; i < vars.size(); ++i) v[vars[i]] = fam.stables[idx[i]];
    Interp l = interpret(F, v, s.left), r = interpret(F, v, s.right);
    if (!subset(l.ext, r.ext)) {
      out.valid = false;
      for (size_t i = 0; i < vars.size(); ++i)
        out.witness.emplace_back(vars[i], fam.stables[idx[i]]);
      return out;
    }
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == fam.stables.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return out;
}

bool frame_valid(const Frame& F, const Sequent& s) { return frame_verdict(F, s).valid; }

Countermodel countermodel_search(const Sequent& s, const std::string& class_tag, int bound) {
  Variety cls = variety_from_tag(class_tag);
  Countermodel out;
  out.bound = bound;
  for_each_algebra(bound, cls, [&](const FiniteLattice& L) {
    AlgebraVerdict v = algebra_verdict(L, s);
    if (!v.valid) {
      out.found = true;
      out.algebra = L;
      out.valuation = v.witness;
      return false;  // stop
    }
    return true;
  });
  return out;
}

namespace {

// one-way matching of an axiom schema against a concrete formula
bool match(const Fml& pat, const Fml& f, std::map<std::string, Fml>& bind) {
  switch (pat->kind) {
    case Formula::Var: {
      auto it = bind.find(pat->var);
      if (it == bind.end()) {
        bind[pat->var] = f;
        return true;
      }
      return equal(it->second, f);
    }
    case Formula::Top:
    case Formula::Bot: return pat->kind == f->kind;
    case Formula::Not: return f->kind == Formula::Not && match(pat->a, f->a, bind);
    default:
      return pat->kind == f->kind && match(pat->a, f->a, bind) && match(pat->b, f->b, bind);
  }
}

bool check_node(const ProofNode& t, const LogicExtension& ext, const std::string& path,
                std::string& bad) {
  auto invalid = [&](const std::string& why) {
    bad = path + ": " + why + " [" + to_string(t.conclusion) + "]";
    return false;
  };
  const Fml& L = t.conclusion.left;
  const Fml& R = t.conclusion.right;
  const std::string& r = t.rule;
  bool leaf = r != "cut" && r != "antitone";
  if (leaf && !t.premises.empty()) return invalid("initial sequent with premises");

  if (r == "id") {
    if (!equal(L, R)) return invalid("id needs identical sides");
  } else if (r == "top") {
    if (R->kind != Formula::Top) return invalid("top needs T on the right");
  } else if (r == "bot") {
    if (L->kind != Formula::Bot) return invalid("bot needs F on the left");
  } else if (r == "and-left-1") {
    if (L->kind != Formula::And || !equal(L->a, R)) return invalid("not of shape a&b |- a");
  } else if (r == "and-left-2") {
    if (L->kind != Formula::And || !equal(L->b, R)) return invalid("not of shape a&b |- b");
  } else if (r == "or-right-1") {
    if (R->kind != Formula::Or || !equal(R->a, L)) return invalid("not of shape a |- a|b");
  } else if (r == "or-right-2") {
    if (R->kind != Formula::Or || !equal(R->b, L)) return invalid("not of shape b |- a|b");
  } else if (r == "demorgan") {
    bool shape = L->kind == Formula::Not && L->a->kind == Formula::Or &&
                 R->kind == Formula::And && R->a->kind == Formula::Not &&
                 R->b->kind == Formula::Not && equal(L->a->a, R->a->a) &&
                 equal(L->a->b, R->b->a);
    if (!shape) return invalid("not of shape ~(a|b) |- ~a&~b");
  } else if (r == "top-nbot") {
    if (L->kind != Formula::Top || R->kind != Formula::Not || R->a->kind != Formula::Bot)
      return invalid("not of shape T |- ~F");
  } else if (r == "cut") {
    if (t.premises.size() != 2) return invalid("cut needs two premises");
    const Sequent& p1 = t.premises[0].conclusion;
    const Sequent& p2 = t.premises[1].conclusion;
    if (!equal(p1.right, p2.left) || !equal(p1.left, L) || !equal(p2.right, R))
      return invalid("cut premises do not compose to the conclusion");
  } else if (r == "antitone") {
    if (t.premises.size() != 1) return invalid("antitone needs one premise");
    const Sequent& p = t.premises[0].conclusion;
    if (L->kind != Formula::Not || R->kind != Formula::Not || !equal(L->a, p.right) ||
        !equal(R->a, p.left))
      return invalid("conclusion is not ~psi |- ~phi for premise phi |- psi");
  } else if (r == "axiom") {
    bool hit = false;
    for (const Sequent& ax : ext.axioms) {
      std::map<std::string, Fml> bind;
      if (match(ax.left, L, bind) && match(ax.right, R, bind)) {
        hit = true;
        break;
      }
    }
    if (!hit) return invalid("no extension axiom matches (up to substitution)");
  } else {
    return invalid("unknown rule '" + r + "'");
  }

  for (size_t i = 0; i < t.premises.size(); ++i)
    if (!check_node(t.premises[i], ext, path + "." + std::to_string(i + 1), bad)) return false;
  return true;
}

}  // namespace

ProofCheck check_proof(const ProofNode& t, const LogicExtension& ext) {
  ProofCheck out;
  std::string bad;
  if (!check_node(t, ext, "root", bad)) {
    out.ok = false;
    out.first_invalid = bad;
  }
  return out;
}

}  // namespace gdlab
