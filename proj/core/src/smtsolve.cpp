// SPDX-License-Identifier: Apache-2.0
#include "svaeq/smtsolve.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace svaeq::smtsolve {

namespace {

// ---- s-expression reader ----

struct Sexp {
  bool atom = true;
  std::string text;
  std::vector<Sexp> items;
};

class Reader {
public:
  explicit Reader(std::istream &in) : in_(in) {}

  bool next(Sexp &out) {
    skip_ws();
    if (peek() == EOF)
      return false;
    out = read();
    return true;
  }

private:
  std::istream &in_;
  int peek_ = -2;

  int peek() {
    if (peek_ == -2)
      peek_ = in_.get();
    return peek_;
  }
  int get() {
    int c = peek();
    peek_ = -2;
    return c;
  }

  void skip_ws() {
    for (;;) {
      int c = peek();
      if (c == ';') {
        while (c != EOF && c != '\n') {
          get();
          c = peek();
        }
        continue;
      }
      if (c != EOF && std::isspace(c)) {
        get();
        continue;
      }
      return;
    }
  }

  Sexp read() {
    skip_ws();
    int c = peek();
    if (c == '(') {
      get();
      Sexp list;
      list.atom = false;
      for (;;) {
        skip_ws();
        c = peek();
        if (c == EOF)
          throw std::runtime_error("unexpected end of input in list");
        if (c == ')') {
          get();
          return list;
        }
        list.items.push_back(read());
      }
    }
    if (c == '|' || c == '"') {
      char quote = static_cast<char>(get());
      Sexp a;
      std::string s(1, quote);
      for (;;) {
        c = get();
        if (c == EOF)
          throw std::runtime_error("unterminated quoted token");
        s += static_cast<char>(c);
        if (c == quote)
          break;
      }
      a.text = s;
      return a;
    }
    Sexp a;
    std::string s;
    while (c != EOF && !std::isspace(c) && c != '(' && c != ')') {
      s += static_cast<char>(get());
      c = peek();
    }
    if (s.empty())
      throw std::runtime_error("stray character in input");
    a.text = s;
    return a;
  }
};

// ---- formula DAG (ids 0/1 are false/true) ----

struct Node {
  enum class Kind { Const, Var, Not, And } kind;
  int a = -1, b = -1;
  int var = -1;
};

class Builder {
public:
  Builder() {
    nodes_.push_back({Node::Kind::Const, -1, -1, -1});
    nodes_.push_back({Node::Kind::Const, -1, -1, -1});
  }

  int var(const std::string &name) {
    auto it = var_ids_.find(name);
    if (it != var_ids_.end())
      return var_node_[static_cast<std::size_t>(it->second)];
    int v = static_cast<int>(var_names_.size());
    var_names_.push_back(name);
    var_ids_.emplace(name, v);
    nodes_.push_back({Node::Kind::Var, -1, -1, v});
    var_node_.push_back(static_cast<int>(nodes_.size() - 1));
    return var_node_.back();
  }
  bool has_var(const std::string &name) const {
    return var_ids_.count(name) != 0;
  }
  int node_of_var(const std::string &name) const {
    return var_node_[static_cast<std::size_t>(var_ids_.at(name))];
  }

  int mk_not(int x) {
    if (x == 0)
      return 1;
    if (x == 1)
      return 0;
    if (nodes_[static_cast<std::size_t>(x)].kind == Node::Kind::Not)
      return nodes_[static_cast<std::size_t>(x)].a;
    return intern({Node::Kind::Not, x, -1, -1});
  }
  int mk_and(int x, int y) {
    if (x == 0 || y == 0)
      return 0;
    if (x == 1)
      return y;
    if (y == 1)
      return x;
    if (x == y)
      return x;
    if (x > y)
      std::swap(x, y);
    return intern({Node::Kind::And, x, y, -1});
  }
  int mk_or(int x, int y) { return mk_not(mk_and(mk_not(x), mk_not(y))); }
  int mk_xor(int x, int y) {
    return mk_or(mk_and(x, mk_not(y)), mk_and(mk_not(x), y));
  }
  int mk_eq(int x, int y) { return mk_not(mk_xor(x, y)); }
  int mk_ite(int c, int x, int y) {
    return mk_or(mk_and(c, x), mk_and(mk_not(c), y));
  }

  const std::vector<Node> &nodes() const { return nodes_; }
  const std::vector<std::string> &var_names() const { return var_names_; }

private:
  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int>, int> cache_;
  std::map<std::string, int> var_ids_;
  std::vector<std::string> var_names_;
  std::vector<int> var_node_;

  int intern(Node n) {
    auto key = std::tuple{static_cast<int>(n.kind), n.a, n.b};
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
    nodes_.push_back(n);
    int id = static_cast<int>(nodes_.size() - 1);
    cache_.emplace(key, id);
    return id;
  }
};

// ---- Tseitin + DPLL ----

class Solver {
public:
  Solver(const Builder &b, const std::vector<int> &roots) : builder_(b) {
    const auto &nodes = b.nodes();
    nvars_ = nodes.size(); // one CNF variable per DAG node

    auto pos = [](int n) { return 2 * n; };
    auto neg = [](int n) { return 2 * n + 1; };

    add({pos(1)});
    add({neg(0)});
    for (std::size_t i = 2; i < nodes.size(); ++i) {
      const Node &n = nodes[i];
      int self = static_cast<int>(i);
      if (n.kind == Node::Kind::Not) {
        add({neg(self), neg(n.a)});
        add({pos(self), pos(n.a)});
      } else if (n.kind == Node::Kind::And) {
        add({neg(self), pos(n.a)});
        add({neg(self), pos(n.b)});
        add({pos(self), neg(n.a), neg(n.b)});
      }
    }
    for (int r : roots)
      add({pos(r)});
  }

  bool solve() {
    assign_.assign(nvars_, -1);
    trail_.clear();
    return dpll();
  }

  bool node_value(int node_id) const {
    return assign_[static_cast<std::size_t>(node_id)] == 1;
  }

private:
  const Builder &builder_;
  std::size_t nvars_ = 0;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> assign_;
  std::vector<int> trail_;

  void add(std::vector<int> lits) { clauses_.push_back(std::move(lits)); }

  bool lit_true(int lit) const {
    int v = assign_[static_cast<std::size_t>(lit >> 1)];
    return v >= 0 && (v == 1) == ((lit & 1) == 0);
  }
  bool lit_false(int lit) const {
    int v = assign_[static_cast<std::size_t>(lit >> 1)];
    return v >= 0 && (v == 1) != ((lit & 1) == 0);
  }

  void push(int lit) {
    assign_[static_cast<std::size_t>(lit >> 1)] = (lit & 1) ? 0 : 1;
    trail_.push_back(lit >> 1);
  }
  void pop_to(std::size_t mark) {
    while (trail_.size() > mark) {
      assign_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  // TODO: move to two-watched-literal propagation if emitted formulas
  // outgrow the few-thousand-clause pools seen at current depths
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &cl : clauses_) {
        int unit = -1;
        int open = 0;
        bool satisfied = false;
        for (int lit : cl) {
          if (lit_true(lit)) {
            satisfied = true;
            break;
          }
          if (!lit_false(lit)) {
            unit = lit;
            ++open;
            if (open > 1)
              break;
          }
        }
        if (satisfied || open > 1)
          continue;
        if (open == 0)
          return false;
        push(unit);
        changed = true;
      }
    }
    return true;
  }

  bool dpll() {
    if (!propagate())
      return false;
    int v = -1;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (assign_[i] < 0) {
        v = static_cast<int>(i);
        break;
      }
    if (v < 0)
      return true;
    std::size_t mark = trail_.size();
    for (int phase : {1, 0}) { // negative phase first: minimal models
      push(2 * v + phase);
      if (dpll())
        return true;
      pop_to(mark);
    }
    return false;
  }
};

// ---- interpreter ----

struct Env {
  Builder builder;
  std::vector<int> asserts;
  std::map<std::string, int> defines;
  std::vector<std::string> declared;
  bool checked = false;
  bool last_sat = false;
  std::vector<std::pair<std::string, bool>> model;
};

using Bindings = std::map<std::string, int>;

int build_term(Env &env, const Sexp &s, const Bindings &bound) {
  if (s.atom) {
    if (s.text == "true")
      return 1;
    if (s.text == "false")
      return 0;
    auto bit = bound.find(s.text);
    if (bit != bound.end())
      return bit->second;
    auto dit = env.defines.find(s.text);
    if (dit != env.defines.end())
      return dit->second;
    if (env.builder.has_var(s.text))
      return env.builder.node_of_var(s.text);
    throw std::runtime_error("unknown constant " + s.text);
  }
  if (s.items.empty())
    throw std::runtime_error("empty application");
  const std::string &head = s.items[0].text;
  auto arg = [&](std::size_t i) { return build_term(env, s.items[i], bound); };

  if (head == "not") {
    if (s.items.size() != 2)
      throw std::runtime_error("not takes one argument");
    return env.builder.mk_not(arg(1));
  }
  if (head == "and") {
    int f = 1;
    for (std::size_t i = 1; i < s.items.size(); ++i)
      f = env.builder.mk_and(f, arg(i));
    return f;
  }
  if (head == "or") {
    int f = 0;
    for (std::size_t i = 1; i < s.items.size(); ++i)
      f = env.builder.mk_or(f, arg(i));
    return f;
  }
  if (head == "xor") {
    int f = arg(1);
    for (std::size_t i = 2; i < s.items.size(); ++i)
      f = env.builder.mk_xor(f, arg(i));
    return f;
  }
  if (head == "=") {
    int f = 1;
    for (std::size_t i = 2; i < s.items.size(); ++i)
      f = env.builder.mk_and(f, env.builder.mk_eq(arg(i - 1), arg(i)));
    return f;
  }
  if (head == "=>") {
    if (s.items.size() < 3)
      throw std::runtime_error("=> takes two or more arguments");
    int f = build_term(env, s.items.back(), bound);
    for (std::size_t i = s.items.size() - 1; i-- > 1;)
      f = env.builder.mk_or(env.builder.mk_not(build_term(env, s.items[i], bound)),
                            f);
    return f;
  }
  if (head == "ite")
    return env.builder.mk_ite(arg(1), arg(2), arg(3));
  if (head == "let") {
    Bindings inner = bound;
    for (const auto &bind : s.items[1].items) {
      if (bind.atom || bind.items.size() != 2)
        throw std::runtime_error("malformed let binding");
      inner[bind.items[0].text] = build_term(env, bind.items[1], bound);
    }
    return build_term(env, s.items[2], inner);
  }
  throw std::runtime_error("unsupported operator " + head);
}

} // namespace

int run(std::istream &in, std::ostream &out) {
  Reader reader(in);
  Env env;
  Sexp cmd;

  auto error = [&](const std::string &msg) {
    out << "(error \"" << msg << "\")\n";
    out.flush();
  };

  for (;;) {
    try {
      if (!reader.next(cmd))
        return 0;
    } catch (const std::exception &e) {
      error(e.what());
      return 1;
    }
    try {
      if (cmd.atom) {
        error("expected a command");
        continue;
      }
      const std::string &head = cmd.items.empty() ? "" : cmd.items[0].text;
      if (head == "set-logic" || head == "set-option" || head == "set-info")
        continue;
      if (head == "declare-const" || head == "declare-fun") {
        bool fun = head == "declare-fun";
        if (cmd.items.size() != (fun ? 4u : 3u) ||
            (fun && (cmd.items[2].atom || !cmd.items[2].items.empty()))) {
          error("only 0-ary declarations are supported");
          continue;
        }
        const Sexp &sort = fun ? cmd.items[3] : cmd.items[2];
        if (!sort.atom || sort.text != "Bool") {
          error("only Bool constants are supported");
          continue;
        }
        const std::string &name = cmd.items[1].text;
        if (!env.builder.has_var(name))
          env.declared.push_back(name);
        env.builder.var(name);
        continue;
      }
      if (head == "define-fun") {
        if (cmd.items.size() != 5 || cmd.items[2].atom ||
            !cmd.items[2].items.empty() || !cmd.items[3].atom ||
            cmd.items[3].text != "Bool") {
          error("only 0-ary Bool define-fun is supported");
          continue;
        }
        env.defines[cmd.items[1].text] = build_term(env, cmd.items[4], {});
        continue;
      }
      if (head == "assert") {
        if (cmd.items.size() != 2) {
          error("assert takes one term");
          continue;
        }
        env.asserts.push_back(build_term(env, cmd.items[1], {}));
        continue;
      }
      if (head == "check-sat") {
        Solver solver(env.builder, env.asserts);
        env.last_sat = solver.solve();
        env.checked = true;
        env.model.clear();
        if (env.last_sat)
          for (const auto &name : env.declared)
            env.model.emplace_back(
                name, solver.node_value(env.builder.node_of_var(name)));
        out << (env.last_sat ? "sat" : "unsat") << "\n";
        out.flush();
        continue;
      }
      if (head == "get-model") {
        if (!env.checked || !env.last_sat) {
          error("model is not available");
          continue;
        }
        out << "(\n";
        for (const auto &[name, value] : env.model)
          out << "  (define-fun " << name << " () Bool "
              << (value ? "true" : "false") << ")\n";
        out << ")\n";
        out.flush();
        continue;
      }
      if (head == "get-value") {
        if (!env.checked || !env.last_sat) {
          error("model is not available");
          continue;
        }
        out << "(";
        for (const auto &term : cmd.items[1].items) {
          bool v = false;
          for (const auto &[name, value] : env.model)
            if (name == term.text)
              v = value;
          out << "(" << term.text << " " << (v ? "true" : "false") << ")";
        }
        out << ")\n";
        out.flush();
        continue;
      }
      if (head == "exit")
        return 0;
      if (head == "reset") {
        env = Env{};
        continue;
      }
      error("unsupported command " + head);
    } catch (const std::exception &e) {
      error(e.what());
    }
  }
}

std::string solve_script(const std::string &script) {
  std::istringstream in(script);
  std::ostringstream out;
  run(in, out);
  return out.str();
}

} // namespace svaeq::smtsolve
