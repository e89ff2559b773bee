// SPDX-License-Identifier: Apache-2.0
//
// Symbolic twin of eval.cpp: the same match-set recursion producing
// boolean formulas over (signal, cycle) constants instead of values.
// The conventions documented at the top of eval.cpp apply verbatim.
#include "svaeq/smt.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>

#include "svaeq/errors.hpp"

extern char **environ;

namespace svaeq {

namespace {

// Hash-consed and/or/not DAG; ids 0 and 1 are the constants.
class FormulaBank {
public:
  struct Node {
    enum class Kind { Const, Var, Not, And, Or } kind;
    int a = -1, b = -1;
    int sig = -1, cycle = -1;
  };

  FormulaBank() {
    nodes_.push_back({Node::Kind::Const, -1, -1, -1, -1}); // 0 = false
    nodes_.push_back({Node::Kind::Const, -1, -1, -1, -1}); // 1 = true
  }

  int mk_false() const { return 0; }
  int mk_true() const { return 1; }

  int mk_var(int sig, int cycle) {
    auto key = std::tuple{2, sig, cycle};
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
    nodes_.push_back({Node::Kind::Var, -1, -1, sig, cycle});
    int id = static_cast<int>(nodes_.size() - 1);
    cache_.emplace(key, id);
    return id;
  }

  int mk_not(int x) {
    if (x == 0)
      return 1;
    if (x == 1)
      return 0;
    if (nodes_[static_cast<std::size_t>(x)].kind == Node::Kind::Not)
      return nodes_[static_cast<std::size_t>(x)].a;
    auto key = std::tuple{3, x, -1};
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
    nodes_.push_back({Node::Kind::Not, x, -1, -1, -1});
    int id = static_cast<int>(nodes_.size() - 1);
    cache_.emplace(key, id);
    return id;
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
    auto key = std::tuple{4, x, y};
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
    nodes_.push_back({Node::Kind::And, x, y, -1, -1});
    int id = static_cast<int>(nodes_.size() - 1);
    cache_.emplace(key, id);
    return id;
  }

  int mk_or(int x, int y) {
    if (x == 1 || y == 1)
      return 1;
    if (x == 0)
      return y;
    if (y == 0)
      return x;
    if (x == y)
      return x;
    if (x > y)
      std::swap(x, y);
    auto key = std::tuple{5, x, y};
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
    nodes_.push_back({Node::Kind::Or, x, y, -1, -1});
    int id = static_cast<int>(nodes_.size() - 1);
    cache_.emplace(key, id);
    return id;
  }

  const std::vector<Node> &nodes() const { return nodes_; }

private:
  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int>, int> cache_;
};

class SymbolicEncoder {
public:
  SymbolicEncoder(FormulaBank &bank, const Lowered &prop,
                  const std::vector<std::string> &universe, int depth)
      : bank_(bank), prop_(prop), depth_(depth) {
    atom_to_universe_.resize(prop.atoms.size());
    for (std::size_t i = 0; i < prop.atoms.size(); ++i) {
      auto it = std::find(universe.begin(), universe.end(), prop.atoms[i]);
      if (it == universe.end())
        throw Error("universe does not cover atom " + prop.atoms[i]);
      atom_to_universe_[i] = static_cast<int>(it - universe.begin());
    }
  }

  // formula: property not violated at any start cycle
  int holds_formula() {
    int all = bank_.mk_true();
    for (int t = 0; t < depth_; ++t)
      all = bank_.mk_and(all, bank_.mk_not(violated_with_abort(t)));
    return all;
  }

  // formula: some start cycle has an undischarged violation
  int violated_formula() {
    int any = bank_.mk_false();
    for (int t = 0; t < depth_; ++t)
      any = bank_.mk_or(any, violated_with_abort(t));
    return any;
  }

private:
  FormulaBank &bank_;
  const Lowered &prop_;
  int depth_;
  std::vector<int> atom_to_universe_;

  struct SeqSym {
    std::vector<int> ends; // formula per end bit position, size depth+1
    int pend = 0;
  };
  std::map<std::pair<int, int>, SeqSym> seq_memo_;
  std::map<std::pair<int, int>, int> bool_memo_;
  std::map<std::pair<int, int>, int> prop_memo_;

  int bool_at(int b, int t) {
    auto key = std::make_pair(b, t);
    auto it = bool_memo_.find(key);
    if (it != bool_memo_.end())
      return it->second;
    const auto &n = prop_.bexprs[static_cast<std::size_t>(b)];
    using K = Lowered::BNode::Kind;
    int f = 0;
    switch (n.kind) {
    case K::Const:
      f = n.cval ? bank_.mk_true() : bank_.mk_false();
      break;
    case K::Atom:
      f = bank_.mk_var(atom_to_universe_[static_cast<std::size_t>(n.atom)], t);
      break;
    case K::Not:
      f = bank_.mk_not(bool_at(n.a, t));
      break;
    case K::And:
      f = bank_.mk_and(bool_at(n.a, t), bool_at(n.b, t));
      break;
    case K::Or:
      f = bank_.mk_or(bool_at(n.a, t), bool_at(n.b, t));
      break;
    case K::Rose: {
      int prev = t > 0 ? bool_at(n.a, t - 1) : bank_.mk_false();
      f = bank_.mk_and(bool_at(n.a, t), bank_.mk_not(prev));
      break;
    }
    case K::Fell: {
      int prev = t > 0 ? bool_at(n.a, t - 1) : bank_.mk_false();
      f = bank_.mk_and(bank_.mk_not(bool_at(n.a, t)), prev);
      break;
    }
    case K::Stable: {
      int now = bool_at(n.a, t);
      int prev = t > 0 ? bool_at(n.a, t - 1) : bank_.mk_false();
      f = bank_.mk_or(bank_.mk_and(now, prev),
                      bank_.mk_and(bank_.mk_not(now), bank_.mk_not(prev)));
      break;
    }
    case K::Past:
      f = t > 0 ? bool_at(n.a, t - 1) : bank_.mk_false();
      break;
    }
    bool_memo_.emplace(key, f);
    return f;
  }

  const SeqSym &seq_at(int s, int t) {
    auto key = std::make_pair(s, t);
    auto it = seq_memo_.find(key);
    if (it != seq_memo_.end())
      return it->second;

    const auto &n = prop_.seqs[static_cast<std::size_t>(s)];
    using K = Lowered::SNode::Kind;
    SeqSym r;
    r.ends.assign(static_cast<std::size_t>(depth_) + 1, bank_.mk_false());
    r.pend = bank_.mk_false();
    const int K_ = depth_;

    switch (n.kind) {
    case K::SBool:
      r.ends[static_cast<std::size_t>(t) + 1] = bool_at(n.bexpr, t);
      break;

    case K::SDelay: {
      std::vector<int> lhs_ends;
      int lhs_pend = bank_.mk_false();
      bool leading = n.lhs < 0;
      if (!leading) {
        const SeqSym &l = seq_at(n.lhs, t);
        lhs_ends = l.ends;
        lhs_pend = l.pend;
      }
      r.pend = lhs_pend;
      for (int d = n.lo; d <= n.hi; ++d) {
        if (leading) {
          int start = t + d;
          if (start >= K_) {
            r.pend = bank_.mk_true();
            continue;
          }
          const SeqSym &sub = seq_at(n.rhs, start);
          for (int e = 0; e <= K_; ++e)
            r.ends[static_cast<std::size_t>(e)] =
                bank_.mk_or(r.ends[static_cast<std::size_t>(e)],
                            sub.ends[static_cast<std::size_t>(e)]);
          r.pend = bank_.mk_or(r.pend, sub.pend);
          continue;
        }
        for (int e = t - 1; e < K_; ++e) {
          int cond = lhs_ends[static_cast<std::size_t>(e) + 1];
          if (cond == 0)
            continue;
          int start = e + d;
          if (start < t)
            continue; // empty lhs with ##0 cannot fuse
          if (start >= K_) {
            r.pend = bank_.mk_or(r.pend, cond);
            continue;
          }
          const SeqSym &sub = seq_at(n.rhs, start);
          for (int e2 = 0; e2 <= K_; ++e2) {
            int f = sub.ends[static_cast<std::size_t>(e2)];
            if (d == 0 && e2 == start)
              continue; // ##0 with an empty rhs cannot fuse
            r.ends[static_cast<std::size_t>(e2)] = bank_.mk_or(
                r.ends[static_cast<std::size_t>(e2)], bank_.mk_and(cond, f));
          }
          r.pend = bank_.mk_or(r.pend, bank_.mk_and(cond, sub.pend));
        }
      }
      break;
    }

    case K::SRepeat: {
      std::vector<int> cur(static_cast<std::size_t>(K_) + 1, bank_.mk_false());
      cur[static_cast<std::size_t>(t)] = bank_.mk_true(); // empty match
      int cur_pend = bank_.mk_false();
      if (n.lo == 0)
        r.ends[static_cast<std::size_t>(t)] = bank_.mk_true();
      for (int rep = 1; rep <= n.hi; ++rep) {
        std::vector<int> next(static_cast<std::size_t>(K_) + 1,
                              bank_.mk_false());
        int next_pend = cur_pend;
        for (int e = t - 1; e < K_; ++e) {
          int cond = cur[static_cast<std::size_t>(e) + 1];
          if (cond == 0)
            continue;
          int start = e + 1;
          if (start >= K_) {
            next_pend = bank_.mk_or(next_pend, cond);
            continue;
          }
          const SeqSym &sub = seq_at(n.rhs, start);
          for (int e2 = 0; e2 <= K_; ++e2)
            next[static_cast<std::size_t>(e2)] = bank_.mk_or(
                next[static_cast<std::size_t>(e2)],
                bank_.mk_and(cond, sub.ends[static_cast<std::size_t>(e2)]));
          next_pend = bank_.mk_or(next_pend, bank_.mk_and(cond, sub.pend));
        }
        r.pend = bank_.mk_or(r.pend, next_pend);
        if (rep >= n.lo)
          for (int e = 0; e <= K_; ++e)
            r.ends[static_cast<std::size_t>(e)] =
                bank_.mk_or(r.ends[static_cast<std::size_t>(e)],
                            next[static_cast<std::size_t>(e)]);
        if (next == cur && next_pend == cur_pend)
          break;
        cur = std::move(next);
        cur_pend = next_pend;
        bool all_false =
            std::all_of(cur.begin(), cur.end(), [](int f) { return f == 0; });
        if (all_false && cur_pend == 0)
          break;
      }
      break;
    }

    case K::SThroughout: {
      const SeqSym &sub = seq_at(n.rhs, t);
      // ok[c] = condition held on [t, c-1]
      int ok = bank_.mk_true();
      r.ends[static_cast<std::size_t>(t)] =
          sub.ends[static_cast<std::size_t>(t)]; // empty match needs nothing
      for (int e = t; e < K_; ++e) {
        ok = bank_.mk_and(ok, bool_at(n.bexpr, e));
        r.ends[static_cast<std::size_t>(e) + 1] =
            bank_.mk_and(sub.ends[static_cast<std::size_t>(e) + 1], ok);
      }
      r.pend = bank_.mk_and(sub.pend, ok); // ok now covers [t, K-1]
      break;
    }

    case K::SWithin: {
      const SeqSym &outer = seq_at(n.rhs, t);
      r.pend = outer.pend;
      for (int e = t - 1; e < K_; ++e) {
        int cond = outer.ends[static_cast<std::size_t>(e) + 1];
        if (cond == 0)
          continue;
        int contained = bank_.mk_false();
        for (int t2 = t; t2 <= e + 1 && t2 < K_; ++t2) {
          const SeqSym &inner = seq_at(n.lhs, t2);
          for (int e2 = t2 - 1; e2 <= e; ++e2)
            contained = bank_.mk_or(
                contained, inner.ends[static_cast<std::size_t>(e2) + 1]);
        }
        r.ends[static_cast<std::size_t>(e) + 1] =
            bank_.mk_and(cond, contained);
      }
      break;
    }

    case K::SIntersect: {
      const SeqSym &a = seq_at(n.lhs, t);
      const SeqSym &b = seq_at(n.rhs, t);
      for (int e = 0; e <= K_; ++e)
        r.ends[static_cast<std::size_t>(e)] =
            bank_.mk_and(a.ends[static_cast<std::size_t>(e)],
                         b.ends[static_cast<std::size_t>(e)]);
      r.pend = bank_.mk_and(a.pend, b.pend);
      break;
    }
    }

    auto [pos, _] = seq_memo_.emplace(key, std::move(r));
    return pos->second;
  }

  int violated_at(int p, int t) {
    auto key = std::make_pair(p, t);
    auto it = prop_memo_.find(key);
    if (it != prop_memo_.end())
      return it->second;
    const auto &n = prop_.props[static_cast<std::size_t>(p)];
    int v = bank_.mk_false();
    if (n.kind == Lowered::PNode::Kind::PSeq) {
      const SeqSym &r = seq_at(n.seq, t);
      int some_end = bank_.mk_false();
      for (int e = t - 1; e < depth_; ++e)
        some_end =
            bank_.mk_or(some_end, r.ends[static_cast<std::size_t>(e) + 1]);
      v = bank_.mk_and(bank_.mk_not(some_end), bank_.mk_not(r.pend));
    } else {
      const SeqSym ant = seq_at(n.seq, t); // copy: recursion reuses memo
      for (int e = t - 1; e < depth_; ++e) {
        int cond = ant.ends[static_cast<std::size_t>(e) + 1];
        if (cond == 0)
          continue;
        if (n.overlap && e < t)
          continue;
        int start = n.overlap ? e : e + 1;
        if (start >= depth_)
          continue;
        v = bank_.mk_or(v, bank_.mk_and(cond, violated_at(n.consequent, start)));
      }
    }
    prop_memo_.emplace(key, v);
    return v;
  }

  int violated_with_abort(int t) {
    int v = violated_at(prop_.root, t);
    if (prop_.abort >= 0) {
      int fired = bank_.mk_false();
      int last = std::min(depth_ - 1, t + prop_.window);
      for (int u = t; u <= last; ++u)
        fired = bank_.mk_or(fired, bool_at(prop_.abort, u));
      v = bank_.mk_and(v, bank_.mk_not(fired));
    }
    return v;
  }
};

std::string var_name(const std::string &signal, int cycle) {
  return "|" + signal + "#" + std::to_string(cycle) + "|";
}

void emit_formulas(std::ostringstream &os, const FormulaBank &bank,
                   const std::vector<std::string> &universe, int f_assumed,
                   int f_asserted) {
  const auto &nodes = bank.nodes();
  std::vector<bool> used(nodes.size(), false);
  std::vector<int> stack{f_assumed, f_asserted};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (id < 0 || used[static_cast<std::size_t>(id)])
      continue;
    used[static_cast<std::size_t>(id)] = true;
    const auto &n = nodes[static_cast<std::size_t>(id)];
    if (n.a >= 0)
      stack.push_back(n.a);
    if (n.b >= 0)
      stack.push_back(n.b);
  }

  for (std::size_t id = 2; id < nodes.size(); ++id) {
    if (!used[id])
      continue;
    if (nodes[id].kind == FormulaBank::Node::Kind::Var)
      os << "(declare-const "
         << var_name(universe[static_cast<std::size_t>(nodes[id].sig)],
                     nodes[id].cycle)
         << " Bool)\n";
  }

  auto ref = [&](int id) -> std::string {
    if (id == 0)
      return "false";
    if (id == 1)
      return "true";
    const auto &n = nodes[static_cast<std::size_t>(id)];
    if (n.kind == FormulaBank::Node::Kind::Var)
      return var_name(universe[static_cast<std::size_t>(n.sig)], n.cycle);
    return "f" + std::to_string(id);
  };

  // children always have smaller ids, so ascending id order is topological
  for (std::size_t id = 2; id < nodes.size(); ++id) {
    if (!used[id])
      continue;
    const auto &n = nodes[id];
    switch (n.kind) {
    case FormulaBank::Node::Kind::Var:
    case FormulaBank::Node::Kind::Const:
      break;
    case FormulaBank::Node::Kind::Not:
      os << "(define-fun f" << id << " () Bool (not " << ref(n.a) << "))\n";
      break;
    case FormulaBank::Node::Kind::And:
      os << "(define-fun f" << id << " () Bool (and " << ref(n.a) << " "
         << ref(n.b) << "))\n";
      break;
    case FormulaBank::Node::Kind::Or:
      os << "(define-fun f" << id << " () Bool (or " << ref(n.a) << " "
         << ref(n.b) << "))\n";
      break;
    }
  }
  os << "(assert " << ref(f_assumed) << ")\n";
  os << "(assert " << ref(f_asserted) << ")\n";
}

} // namespace

std::string emit_smt(const Lowered &assumed, const Lowered &asserted,
                     const CheckConfig &cfg) {
  cfg.validate();
  std::vector<std::string> universe = signal_union(assumed, asserted);
  FormulaBank bank;
  SymbolicEncoder enc_a(bank, assumed, universe, cfg.depth_K);
  SymbolicEncoder enc_b(bank, asserted, universe, cfg.depth_K);
  int f_assumed = enc_a.holds_formula();
  int f_asserted = enc_b.violated_formula();

  std::ostringstream os;
  os << "(set-logic QF_UF)\n";
  os << "(set-option :produce-models true)\n";
  emit_formulas(os, bank, universe, f_assumed, f_asserted);
  os << "(check-sat)\n(get-model)\n";
  return os.str();
}

namespace {

std::once_flag sigpipe_once;

void ignore_sigpipe() {
  std::call_once(sigpipe_once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

} // namespace

SolverResponse run_solver(const std::vector<std::string> &argv,
                          const std::string &script, double timeout_seconds) {
  if (argv.empty())
    throw ConfigError("empty solver command");
  ignore_sigpipe();

  int in_pipe[2], out_pipe[2];
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0)
    throw Error("pipe failed");

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in_pipe[0], 0);
  posix_spawn_file_actions_adddup2(&actions, out_pipe[1], 1);
  posix_spawn_file_actions_addclose(&actions, in_pipe[1]);
  posix_spawn_file_actions_addclose(&actions, out_pipe[0]);

  std::vector<char *> cargv;
  for (const auto &a : argv)
    cargv.push_back(const_cast<char *>(a.c_str()));
  cargv.push_back(nullptr);

  pid_t pid = -1;
  int rc = posix_spawnp(&pid, cargv[0], &actions, nullptr, cargv.data(),
                        environ);
  posix_spawn_file_actions_destroy(&actions);
  close(in_pipe[0]);
  close(out_pipe[1]);
  if (rc != 0) {
    close(in_pipe[1]);
    close(out_pipe[0]);
    return {SolverResponse::Status::Error,
            std::string("spawn failed: ") + std::strerror(rc)};
  }

  fcntl(in_pipe[1], F_SETFL, O_NONBLOCK);
  fcntl(out_pipe[0], F_SETFL, O_NONBLOCK);

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(timeout_seconds));

  std::string output;
  std::size_t written = 0;
  bool stdin_open = true;
  bool timed_out = false;

  for (;;) {
    struct pollfd fds[2];
    int nfds = 0;
    int out_idx = -1, in_idx = -1;
    if (stdin_open) {
      fds[nfds] = {in_pipe[1], POLLOUT, 0};
      in_idx = nfds++;
    }
    fds[nfds] = {out_pipe[0], POLLIN, 0};
    out_idx = nfds++;

    auto now = std::chrono::steady_clock::now();
    if (now > deadline) {
      timed_out = true;
      break;
    }
    int wait_ms = static_cast<int>(
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now)
            .count());
    wait_ms = std::max(1, std::min(wait_ms, 200));
    int pr = poll(fds, static_cast<nfds_t>(nfds), wait_ms);
    if (pr < 0) {
      if (errno == EINTR)
        continue;
      break;
    }
    if (in_idx >= 0 && (fds[in_idx].revents & (POLLOUT | POLLERR))) {
      if (written < script.size()) {
        ssize_t w = write(in_pipe[1], script.data() + written,
                          script.size() - written);
        if (w > 0)
          written += static_cast<std::size_t>(w);
        else if (w < 0 && errno != EAGAIN && errno != EINTR) {
          close(in_pipe[1]);
          stdin_open = false;
        }
      }
      if (written >= script.size() && stdin_open) {
        close(in_pipe[1]);
        stdin_open = false;
      }
    }
    if (fds[out_idx].revents & (POLLIN | POLLHUP)) {
      char buf[4096];
      ssize_t r = read(out_pipe[0], buf, sizeof buf);
      if (r > 0) {
        output.append(buf, static_cast<std::size_t>(r));
        continue;
      }
      if (r == 0)
        break; // EOF
      if (errno != EAGAIN && errno != EINTR)
        break;
    }
  }

  if (stdin_open)
    close(in_pipe[1]);
  close(out_pipe[0]);
  if (timed_out)
    kill(pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);

  if (timed_out)
    return {SolverResponse::Status::Timeout, std::move(output)};

  // first non-empty line decides
  std::istringstream is(output);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    if (line.rfind("sat", 0) == 0)
      return {SolverResponse::Status::Sat, std::move(output)};
    if (line.rfind("unsat", 0) == 0)
      return {SolverResponse::Status::Unsat, std::move(output)};
    if (line.rfind("unknown", 0) == 0)
      return {SolverResponse::Status::Unknown, std::move(output)};
    break;
  }
  return {SolverResponse::Status::Error, std::move(output)};
}

std::vector<std::string> resolve_solver_command(const CheckConfig &cfg) {
  if (!cfg.solver_cmd.empty())
    return cfg.solver_cmd;
  if (const char *env = std::getenv("SVA_EQUIV_SMT_SOLVER")) {
    std::istringstream is(env);
    std::vector<std::string> parts;
    std::string p;
    while (is >> p)
      parts.push_back(p);
    if (!parts.empty())
      return parts;
  }
  std::error_code ec;
  auto self = std::filesystem::read_symlink("/proc/self/exe", ec);
  if (!ec) {
    auto sibling = self.parent_path() / "svaeq-smt";
    if (std::filesystem::exists(sibling, ec))
      return {sibling.string()};
  }
  return {"svaeq-smt"};
}

TraceAssignment parse_model(const std::string &output,
                            const std::vector<std::string> &universe,
                            int depth) {
  TraceAssignment tr;
  tr.depth = depth;
  tr.signals = universe;
  tr.columns.assign(universe.size(), 0);

  std::size_t pos = 0;
  while ((pos = output.find("define-fun", pos)) != std::string::npos) {
    pos += 10;
    std::size_t i = pos;
    while (i < output.size() && std::isspace(static_cast<unsigned char>(output[i])))
      ++i;
    std::string name;
    if (i < output.size() && output[i] == '|') {
      std::size_t e = output.find('|', i + 1);
      if (e == std::string::npos)
        break;
      name = output.substr(i + 1, e - i - 1);
      i = e + 1;
    } else {
      while (i < output.size() &&
             !std::isspace(static_cast<unsigned char>(output[i])) &&
             output[i] != '(' && output[i] != ')')
        name += output[i++];
    }
    std::size_t hash = name.rfind('#');
    if (hash == std::string::npos)
      continue;
    std::string sig = name.substr(0, hash);
    int cycle = std::atoi(name.c_str() + hash + 1);
    // the value is the first true/false word before the next entry
    std::size_t span_end = output.find("define-fun", i);
    if (span_end == std::string::npos)
      span_end = output.size();
    std::string span = output.substr(i, span_end - i);
    std::size_t at_true = span.find("true");
    std::size_t at_false = span.find("false");
    bool value = at_true != std::string::npos &&
                 (at_false == std::string::npos || at_true < at_false);
    auto it = std::find(universe.begin(), universe.end(), sig);
    if (it == universe.end() || cycle < 0 || cycle >= depth)
      continue;
    if (value)
      tr.columns[static_cast<std::size_t>(it - universe.begin())] |=
          1ull << cycle;
  }
  return tr;
}

BmcOutcome bmc_check_smt(const Lowered &assumed, const Lowered &asserted,
                         const CheckConfig &cfg) {
  std::string script = emit_smt(assumed, asserted, cfg);
  auto argv = resolve_solver_command(cfg);
  SolverResponse resp = run_solver(argv, script, cfg.timeout_seconds);
  switch (resp.status) {
  case SolverResponse::Status::Unsat:
    return {BmcOutcome::Status::Pass, std::nullopt, false};
  case SolverResponse::Status::Sat: {
    auto universe = signal_union(assumed, asserted);
    return {BmcOutcome::Status::Fail,
            parse_model(resp.output, universe, cfg.depth_K), false};
  }
  case SolverResponse::Status::Unknown:
  case SolverResponse::Status::Timeout:
    return {BmcOutcome::Status::Timeout, std::nullopt, false};
  case SolverResponse::Status::Error:
    throw Error("solver failure: " + resp.output.substr(0, 200));
  }
  return {BmcOutcome::Status::Timeout, std::nullopt, false};
}

} // namespace svaeq
