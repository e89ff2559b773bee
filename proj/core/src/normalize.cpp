// SPDX-License-Identifier: Apache-2.0
//
// Text-level rewrite rules. Rules run in ascending id order inside a
// fixpoint loop; every rule is a manual scan (not std::regex) so quoted
// strings can be skipped uniformly.
#include "svaeq/normalize.hpp"

#include <algorithm>
#include <cctype>

namespace svaeq {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

// true at positions inside a double-quoted string literal
std::vector<bool> string_mask(const std::string &s) {
  std::vector<bool> mask(s.size(), false);
  bool in = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"' && (i == 0 || s[i - 1] != '\\')) {
      in = !in;
      mask[i] = true;
      continue;
    }
    mask[i] = in;
  }
  return mask;
}

std::size_t skip_ws(const std::string &s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
    ++i;
  return i;
}

bool word_boundary(const std::string &s, std::size_t pos, std::size_t len) {
  if (pos > 0 && ident_char(s[pos - 1]))
    return false;
  if (pos + len < s.size() && ident_char(s[pos + len]))
    return false;
  return true;
}

std::size_t find_word(const std::string &s, const std::vector<bool> &mask,
                      const std::string &w, std::size_t from = 0) {
  std::size_t pos = from;
  while ((pos = s.find(w, pos)) != std::string::npos) {
    if (!mask[pos] && word_boundary(s, pos, w.size()))
      return pos;
    ++pos;
  }
  return std::string::npos;
}

// end of the group opened at s[open] == '('; npos if unbalanced
std::size_t match_paren(const std::string &s, const std::vector<bool> &mask,
                        std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (mask[i])
      continue;
    if (s[i] == '(')
      ++depth;
    else if (s[i] == ')' && --depth == 0)
      return i;
  }
  return std::string::npos;
}


// index-expression flattening shared with SymExpr::flat(): "WIDTH-1"
// becomes WIDTH_m1, "i+2" becomes i_p2, "7:0" becomes 7_0
std::string flat_index(const std::string &raw) {
  std::string out;
  auto flat_part = [](const std::string &part) {
    std::string t;
    for (char c : part)
      if (!std::isspace(static_cast<unsigned char>(c)))
        t += c;
    std::size_t op = t.find_first_of("+-");
    if (op != std::string::npos && op > 0) {
      std::string head = t.substr(0, op);
      std::string tail = t.substr(op + 1);
      bool num_tail = !tail.empty() &&
                      std::all_of(tail.begin(), tail.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                      });
      if (num_tail)
        return head + (t[op] == '+' ? "_p" : "_m") + tail;
    }
    std::string fallback;
    for (char c : t)
      fallback += ident_char(c) ? c : '_';
    return fallback;
  };
  std::size_t colon = raw.find(':');
  if (colon == std::string::npos)
    return flat_part(raw);
  return flat_part(raw.substr(0, colon)) + "_" +
         flat_part(raw.substr(colon + 1));
}

struct RuleResult {
  std::string text;
  std::size_t fired = 0;
};

RuleResult rule_replace_word(const std::string &in, const std::string &w,
                             const std::string &repl) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  std::size_t pos = 0;
  while ((pos = find_word(r.text, mask, w, pos)) != std::string::npos) {
    r.text.replace(pos, w.size(), repl);
    mask = string_mask(r.text);
    pos += repl.size();
    ++r.fired;
  }
  return r;
}

// R1: `SIG -> SIG
RuleResult rule_strip_macros(const std::string &in) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  for (std::size_t i = 0; i < r.text.size();) {
    if (!mask[i] && r.text[i] == '`' && i + 1 < r.text.size() &&
        ident_start(r.text[i + 1])) {
      r.text.erase(i, 1);
      mask = string_mask(r.text);
      ++r.fired;
      continue;
    }
    ++i;
  }
  return r;
}

// R2/R9: a.b[0].c -> a_b_0_c, counted against R9 when a mid-path
// bit-select was flattened, R2 otherwise
struct PathFlattenResult {
  std::string text;
  std::size_t fired_r2 = 0;
  std::size_t fired_r9 = 0;
};

PathFlattenResult rule_flatten_paths(const std::string &in) {
  PathFlattenResult r{in, 0, 0};
  auto mask = string_mask(r.text);
  std::size_t i = 0;
  while (i < r.text.size()) {
    if (mask[i] || !ident_start(r.text[i]) ||
        (i > 0 && ident_char(r.text[i - 1]))) {
      ++i;
      continue;
    }
    // scan one path: ID (sel)* ( '.' ID (sel)* )*
    struct Seg {
      std::string name;
      std::vector<std::string> sels;
    };
    std::vector<Seg> segs;
    std::size_t j = i;
    bool ok = true;
    for (;;) {
      if (j >= r.text.size() || !ident_start(r.text[j])) {
        ok = false;
        break;
      }
      Seg seg;
      while (j < r.text.size() && ident_char(r.text[j]))
        seg.name += r.text[j++];
      for (;;) {
        std::size_t k = j;
        if (k >= r.text.size() || r.text[k] != '[')
          break;
        // don't treat repetition suffixes [*..] [=..] as selects
        std::size_t inner = skip_ws(r.text, k + 1);
        if (inner < r.text.size() &&
            (r.text[inner] == '*' || r.text[inner] == '='))
          break;
        int depth = 0;
        std::size_t e = k;
        for (; e < r.text.size(); ++e) {
          if (r.text[e] == '[')
            ++depth;
          else if (r.text[e] == ']' && --depth == 0)
            break;
        }
        if (e >= r.text.size()) {
          ok = false;
          break;
        }
        seg.sels.push_back(r.text.substr(k + 1, e - k - 1));
        j = e + 1;
      }
      if (!ok)
        break;
      segs.push_back(std::move(seg));
      if (j < r.text.size() && r.text[j] == '.' && j + 1 < r.text.size() &&
          ident_start(r.text[j + 1])) {
        ++j;
        continue;
      }
      break;
    }
    if (!ok || segs.size() < 2) {
      // not a hierarchical path; skip the identifier we just scanned
      while (i < r.text.size() && ident_char(r.text[i]))
        ++i;
      continue;
    }
    std::string flat;
    bool mid_select = false;
    for (std::size_t s = 0; s < segs.size(); ++s) {
      if (s)
        flat += "_";
      flat += segs[s].name;
      bool last = s + 1 == segs.size();
      for (const auto &sel : segs[s].sels) {
        if (last) {
          flat += "[" + sel + "]"; // trailing selects stay real selects
        } else {
          flat += "_" + flat_index(sel);
          mid_select = true;
        }
      }
    }
    r.text.replace(i, j - i, flat);
    mask = string_mask(r.text);
    if (mid_select)
      ++r.fired_r9;
    else
      ++r.fired_r2;
    i += flat.size();
  }
  return r;
}

// R3: pkg::x -> x
RuleResult rule_drop_pkg_scope(const std::string &in) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  std::size_t i = 0;
  while (i + 1 < r.text.size()) {
    if (!mask[i] && r.text[i] == ':' && r.text[i + 1] == ':') {
      // delete backwards over the prefix identifier and any whitespace
      std::size_t b = i;
      while (b > 0 && std::isspace(static_cast<unsigned char>(r.text[b - 1])))
        --b;
      std::size_t e = b;
      while (b > 0 && ident_char(r.text[b - 1]))
        --b;
      if (e == b || !ident_start(r.text[b])) {
        ++i;
        continue;
      }
      std::size_t after = skip_ws(r.text, i + 2);
      r.text.erase(b, after - b);
      mask = string_mask(r.text);
      ++r.fired;
      i = b;
      continue;
    }
    ++i;
  }
  return r;
}

// R4: else $task(...) [;] removed
RuleResult rule_strip_else_call(const std::string &in) {
  RuleResult r{in, 0};
  for (;;) {
    auto mask = string_mask(r.text);
    std::size_t pos = find_word(r.text, mask, "else");
    bool changed = false;
    while (pos != std::string::npos) {
      std::size_t j = skip_ws(r.text, pos + 4);
      if (j < r.text.size() && r.text[j] == '$') {
        std::size_t k = j + 1;
        while (k < r.text.size() && ident_char(r.text[k]))
          ++k;
        std::size_t open = skip_ws(r.text, k);
        if (open < r.text.size() && r.text[open] == '(') {
          std::size_t close = match_paren(r.text, mask, open);
          if (close != std::string::npos) {
            std::size_t end = skip_ws(r.text, close + 1);
            if (end < r.text.size() && r.text[end] == ';')
              ++end;
            r.text.erase(pos, end - pos);
            ++r.fired;
            changed = true;
            break;
          }
        }
      }
      pos = find_word(r.text, mask, "else", pos + 1);
    }
    if (!changed)
      break;
  }
  return r;
}

// R6: unwrap assert/assume/cover property constructs nested inside
// another one; the outermost statement form is left alone
struct Construct {
  std::size_t begin;      // keyword start
  std::size_t open;       // '('
  std::size_t close;      // matching ')'
};

std::vector<Construct> find_constructs(const std::string &s,
                                       const std::vector<bool> &mask) {
  std::vector<Construct> out;
  for (const char *kw : {"assert", "assume", "cover"}) {
    std::size_t pos = 0;
    while ((pos = find_word(s, mask, kw, pos)) != std::string::npos) {
      std::size_t j = skip_ws(s, pos + std::string(kw).size());
      if (j + 8 <= s.size() && s.compare(j, 8, "property") == 0 &&
          word_boundary(s, j, 8)) {
        std::size_t open = skip_ws(s, j + 8);
        if (open < s.size() && s[open] == '(') {
          std::size_t close = match_paren(s, mask, open);
          if (close != std::string::npos)
            out.push_back({pos, open, close});
        }
      }
      ++pos;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Construct &a, const Construct &b) {
              return a.begin < b.begin;
            });
  return out;
}

RuleResult rule_unwrap_nested_assert(const std::string &in) {
  RuleResult r{in, 0};
  for (;;) {
    auto mask = string_mask(r.text);
    auto cs = find_constructs(r.text, mask);
    const Construct *inner = nullptr;
    for (const auto &c : cs)
      for (const auto &outer : cs)
        if (&c != &outer && outer.begin < c.begin && c.close < outer.close) {
          inner = &c;
          break;
        }
    if (!inner)
      break;
    std::string group =
        r.text.substr(inner->open + 1, inner->close - inner->open - 1);
    // drop an immediately following ';'
    std::size_t end = skip_ws(r.text, inner->close + 1);
    if (end < r.text.size() && r.text[end] == ';')
      ++end;
    else
      end = inner->close + 1;
    r.text.replace(inner->begin, end - inner->begin, group);
    ++r.fired;
  }
  return r;
}

// R8: assert property ( body ) with no @ at the head of body gets
// @(posedge clk) injected
RuleResult rule_wrap_unclocked(const std::string &in) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  auto cs = find_constructs(r.text, mask);
  // patch from the back so spans stay valid
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    std::size_t head = skip_ws(r.text, it->open + 1);
    if (head < r.text.size() && r.text[head] != '@') {
      r.text.insert(it->open + 1, "@(posedge clk) ");
      ++r.fired;
    }
  }
  return r;
}

// R10: IDENT'(x) -> (x)
RuleResult rule_strip_casts(const std::string &in) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  std::size_t i = 0;
  while (i < r.text.size()) {
    if (!mask[i] && ident_start(r.text[i]) &&
        (i == 0 || !ident_char(r.text[i - 1]))) {
      std::size_t j = i;
      while (j < r.text.size() && ident_char(r.text[j]))
        ++j;
      if (j + 1 < r.text.size() && r.text[j] == '\'' && r.text[j + 1] == '(') {
        r.text.erase(i, j + 1 - i);
        mask = string_mask(r.text);
        ++r.fired;
        continue;
      }
      i = j;
      continue;
    }
    ++i;
  }
  return r;
}

// R11: // comment to end of line
RuleResult rule_strip_line_comments(const std::string &in) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  std::size_t i = 0;
  while (i + 1 < r.text.size()) {
    if (!mask[i] && r.text[i] == '/' && r.text[i + 1] == '/') {
      std::size_t e = r.text.find('\n', i);
      if (e == std::string::npos)
        e = r.text.size();
      r.text.erase(i, e - i);
      mask = string_mask(r.text);
      ++r.fired;
      continue;
    }
    ++i;
  }
  return r;
}

// R12: parenthesis balance; surplus ')' dropped, missing ')' appended
RuleResult rule_balance_parens(const std::string &in) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  std::string out;
  out.reserve(r.text.size());
  int depth = 0;
  for (std::size_t i = 0; i < r.text.size(); ++i) {
    if (!mask[i]) {
      if (r.text[i] == '(')
        ++depth;
      else if (r.text[i] == ')') {
        if (depth == 0) {
          ++r.fired; // unmatched ')', drop
          continue;
        }
        --depth;
      }
    }
    out += r.text[i];
  }
  while (depth-- > 0) {
    out += ')';
    ++r.fired;
  }
  r.text = std::move(out);
  return r;
}

// R13/R14/R15: collapse ranges to one endpoint
std::string pick_endpoint(const std::string &lo, const std::string &hi,
                          RangeCollapse which) {
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? std::string()
                                  : s.substr(b, e - b + 1);
  };
  std::string l = trim(lo), h = trim(hi);
  if (which == RangeCollapse::Hi && h != "$")
    return h;
  return l;
}

RuleResult rule_collapse_delay_ranges(const std::string &in,
                                      RangeCollapse which) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  std::size_t i = 0;
  while (i + 1 < r.text.size()) {
    if (!mask[i] && r.text[i] == '#' && r.text[i + 1] == '#') {
      std::size_t j = skip_ws(r.text, i + 2);
      if (j < r.text.size() && r.text[j] == '[') {
        std::size_t e = r.text.find(']', j);
        std::size_t colon = r.text.find(':', j);
        if (e != std::string::npos && colon != std::string::npos &&
            colon < e) {
          std::string lo = r.text.substr(j + 1, colon - j - 1);
          std::string hi = r.text.substr(colon + 1, e - colon - 1);
          r.text.replace(i, e + 1 - i, "##" + pick_endpoint(lo, hi, which));
          mask = string_mask(r.text);
          ++r.fired;
          continue;
        }
      }
    }
    ++i;
  }
  return r;
}

RuleResult rule_collapse_repeat_ranges(const std::string &in, char op,
                                       RangeCollapse which) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  std::size_t i = 0;
  while (i < r.text.size()) {
    if (!mask[i] && r.text[i] == '[') {
      std::size_t j = skip_ws(r.text, i + 1);
      bool plus_form = op == '*' && j < r.text.size() && r.text[j] == '+';
      if (j < r.text.size() && (r.text[j] == op || plus_form)) {
        std::size_t e = r.text.find(']', j);
        if (e != std::string::npos) {
          std::string body = r.text.substr(j + 1, e - j - 1);
          std::size_t colon = body.find(':');
          std::string repl;
          if (colon != std::string::npos) {
            repl = pick_endpoint(body.substr(0, colon), body.substr(colon + 1),
                                 which);
          } else if (body.find_first_not_of(" \t") == std::string::npos) {
            repl = "1"; // bare [*] / [+]; 1 avoids the empty-match degeneracy
          } else {
            ++i;
            continue;
          }
          r.text.replace(i, e + 1 - i, std::string("[") + op + repl + "]");
          mask = string_mask(r.text);
          ++r.fired;
          continue;
        }
      }
    }
    ++i;
  }
  return r;
}

// R17: truncate at the first top-level ';', 'begin' or 'else'
RuleResult rule_strip_action_tail(const std::string &in) {
  RuleResult r{in, 0};
  auto mask = string_mask(r.text);
  int paren = 0, bracket = 0;
  for (std::size_t i = 0; i < r.text.size(); ++i) {
    if (mask[i])
      continue;
    char c = r.text[i];
    if (c == '(')
      ++paren;
    else if (c == ')')
      --paren;
    else if (c == '[')
      ++bracket;
    else if (c == ']')
      --bracket;
    if (paren > 0 || bracket > 0)
      continue;
    bool cut = false;
    if (c == ';')
      cut = true;
    else if ((c == 'b' && r.text.compare(i, 5, "begin") == 0 &&
              word_boundary(r.text, i, 5)) ||
             (c == 'e' && r.text.compare(i, 4, "else") == 0 &&
              word_boundary(r.text, i, 4)))
      cut = true;
    if (cut) {
      r.text.erase(i);
      ++r.fired;
      break;
    }
  }
  return r;
}

std::string collapse_whitespace(const std::string &s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending = !out.empty();
      continue;
    }
    if (pending) {
      out += ' ';
      pending = false;
    }
    out += c;
  }
  return out;
}

} // namespace

const char *rule_description(RuleId rule) {
  switch (rule) {
  case RuleId::R1: return "strip backtick macros";
  case RuleId::R2: return "flatten hierarchical paths";
  case RuleId::R3: return "drop package scope prefixes";
  case RuleId::R4: return "strip else action calls";
  case RuleId::R5: return "rewrite s_eventually to ##1";
  case RuleId::R6: return "balanced-paren strip of nested assert property";
  case RuleId::R7: return "rewrite s_until to ##1";
  case RuleId::R8: return "wrap unclocked assertion bodies in @(posedge clk)";
  case RuleId::R9: return "flatten bit-select-in-middle hierarchical paths";
  case RuleId::R10: return "strip typed casts";
  case RuleId::R11: return "strip in-property // comments";
  case RuleId::R12: return "balance parentheses";
  case RuleId::R13: return "collapse ranged delays to fixed counts";
  case RuleId::R14: return "collapse consecutive-repetition ranges to fixed counts";
  case RuleId::R15: return "collapse goto-repetition ranges to fixed counts";
  case RuleId::R16: return "rewrite until to ##1";
  case RuleId::R17: return "strip pass/else action blocks";
  }
  return "?";
}

const char *to_string(RuleId rule) {
  static const char *names[] = {"R1", "R2", "R3", "R4", "R5", "R6",
                                "R7", "R8", "R9", "R10", "R11", "R12",
                                "R13", "R14", "R15", "R16", "R17"};
  return names[static_cast<int>(rule) - 1];
}

const char *to_string(Profile profile) {
  return profile == Profile::Lint ? "lint" : "pec";
}

const std::vector<RuleId> &rules_for(Profile profile) {
  static const std::vector<RuleId> lint = {
      RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R5,
      RuleId::R6, RuleId::R7, RuleId::R8, RuleId::R9, RuleId::R10,
      RuleId::R11, RuleId::R12, RuleId::R13, RuleId::R14, RuleId::R15,
      RuleId::R16, RuleId::R17};
  // meaning-preserving subset; the engine injects clocks itself (R8) and
  // must see liveness/ranges unchanged to abstain on them
  static const std::vector<RuleId> pec = {
      RuleId::R1, RuleId::R2, RuleId::R3, RuleId::R4, RuleId::R6,
      RuleId::R9, RuleId::R10, RuleId::R11, RuleId::R12, RuleId::R17};
  return profile == Profile::Lint ? lint : pec;
}

NormalizeResult normalize(const SourceText &src, const NormalizeOptions &opts) {
  const auto &active = rules_for(opts.profile);
  auto enabled = [&](RuleId r) {
    return std::find(active.begin(), active.end(), r) != active.end();
  };

  std::map<RuleId, std::size_t> fires;
  std::string text = src.raw;

  for (int iter = 0; iter < 10; ++iter) {
    std::string before_pass = text;
    auto apply = [&](RuleId id, RuleResult res) {
      if (res.fired) {
        fires[id] += res.fired;
        text = std::move(res.text);
      }
    };
    if (enabled(RuleId::R1))
      apply(RuleId::R1, rule_strip_macros(text));
    if (enabled(RuleId::R2)) {
      auto res = rule_flatten_paths(text);
      if (res.fired_r2 || res.fired_r9) {
        if (res.fired_r2)
          fires[RuleId::R2] += res.fired_r2;
        if (res.fired_r9)
          fires[RuleId::R9] += res.fired_r9;
        text = std::move(res.text);
      }
    }
    if (enabled(RuleId::R3))
      apply(RuleId::R3, rule_drop_pkg_scope(text));
    if (enabled(RuleId::R4))
      apply(RuleId::R4, rule_strip_else_call(text));
    if (enabled(RuleId::R5))
      apply(RuleId::R5, rule_replace_word(text, "s_eventually", "##1"));
    if (enabled(RuleId::R6))
      apply(RuleId::R6, rule_unwrap_nested_assert(text));
    if (enabled(RuleId::R7))
      apply(RuleId::R7, rule_replace_word(text, "s_until", "##1"));
    if (enabled(RuleId::R8))
      apply(RuleId::R8, rule_wrap_unclocked(text));
    if (enabled(RuleId::R10))
      apply(RuleId::R10, rule_strip_casts(text));
    if (enabled(RuleId::R11))
      apply(RuleId::R11, rule_strip_line_comments(text));
    if (enabled(RuleId::R12))
      apply(RuleId::R12, rule_balance_parens(text));
    if (enabled(RuleId::R13))
      apply(RuleId::R13, rule_collapse_delay_ranges(text, opts.range_collapse));
    if (enabled(RuleId::R14))
      apply(RuleId::R14,
            rule_collapse_repeat_ranges(text, '*', opts.range_collapse));
    if (enabled(RuleId::R15))
      apply(RuleId::R15,
            rule_collapse_repeat_ranges(text, '=', opts.range_collapse));
    if (enabled(RuleId::R16))
      apply(RuleId::R16, rule_replace_word(text, "until", "##1"));
    if (enabled(RuleId::R17))
      apply(RuleId::R17, rule_strip_action_tail(text));
    if (text == before_pass)
      break;
  }

  text = collapse_whitespace(text);

  {
    // internal invariant: R12 must leave parentheses balanced
    auto mask = string_mask(text);
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (mask[i])
        continue;
      if (text[i] == '(')
        ++depth;
      if (text[i] == ')')
        --depth;
      if (depth < 0)
        throw NormalizeError("unbalanced output after R12");
    }
    if (depth != 0 && fires.count(RuleId::R12))
      throw NormalizeError("unbalanced output after R12");
  }

  NormalizeResult out;
  out.after = SourceText{text, src.origin};
  out.report.before = src;
  out.report.after = out.after;
  out.report.profile = opts.profile;
  for (const auto &[id, n] : fires)
    out.report.fired.emplace_back(id, n);
  return out;
}

NormalizeResult normalize(const SourceText &src, Profile profile) {
  NormalizeOptions opts;
  opts.profile = profile;
  return normalize(src, opts);
}

std::size_t NormalizationReport::count(RuleId rule) const {
  for (const auto &[id, n] : fired)
    if (id == rule)
      return n;
  return 0;
}

RuleFireStats rule_fire_stats(const std::vector<SourceText> &rows,
                              const NormalizeOptions &opts) {
  RuleFireStats stats;
  stats.rows = rows.size();
  std::size_t any = 0;
  for (const auto &row : rows) {
    auto res = normalize(row, opts);
    if (res.report.any_fired())
      ++any;
    for (const auto &[id, n] : res.report.fired)
      stats.per_rule[id] += n;
  }
  stats.any_fired_fraction =
      rows.empty() ? 0.0 : static_cast<double>(any) / rows.size();
  return stats;
}

} // namespace svaeq
