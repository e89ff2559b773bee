// SPDX-License-Identifier: Apache-2.0
#include "svaeq/wrapper.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "svaeq/lexer.hpp"
#include "svaeq/parser.hpp"

namespace svaeq {

namespace {

// SV keywords that are legal fragment identifiers but would corrupt the
// emitted module if declared verbatim.
const std::set<std::string> &sv_keywords() {
  static const std::set<std::string> kw = {
      "wire", "reg", "output", "inout", "always", "initial", "bit", "byte",
      "int", "integer", "time", "signed", "unsigned", "if", "case", "for",
      "while", "repeat", "forever", "unique", "priority", "typedef", "enum",
      "struct", "union", "packed", "localparam", "genvar", "generate",
      "endgenerate", "task", "endtask", "void", "string", "real",
  };
  return kw;
}

struct KindEvidence {
  std::set<std::string> clocks;     // flat names under @(...)
  std::set<std::string> callees;    // flat names in call position
  std::set<std::string> mda;        // flat names with >= 2 trailing brackets
};

void gather_evidence(const AstPtr &ast, KindEvidence &ev) {
  if (!ast)
    return;
  if (const auto *clk = ast->as<ClockedNode>()) {
    if (const auto *ref = clk->clock->as<SignalRefNode>())
      ev.clocks.insert(identifier_of(*ref).flat);
    gather_evidence(clk->body, ev);
    return;
  }
  if (const auto *call = ast->as<CallNode>()) {
    ev.callees.insert(call->callee);
    for (const auto &a : call->args)
      gather_evidence(a, ev);
    return;
  }
  if (const auto *ref = ast->as<SignalRefNode>()) {
    Identifier id = identifier_of(*ref);
    if (id.trailing_selects >= 2)
      ev.mda.insert(id.flat);
    return;
  }
  if (const auto *b = ast->as<BoolExprNode>())
    for (const auto &a : b->args)
      gather_evidence(a, ev);
  else if (const auto *s = ast->as<SampledFnNode>())
    gather_evidence(s->arg, ev);
  else if (const auto *r = ast->as<ReductionFnNode>())
    for (const auto &a : r->bits)
      gather_evidence(a, ev);
  else if (const auto *d = ast->as<DelayNode>()) {
    gather_evidence(d->lhs, ev);
    gather_evidence(d->rhs, ev);
  } else if (const auto *rep = ast->as<RepeatNode>())
    gather_evidence(rep->body, ev);
  else if (const auto *impl = ast->as<ImplicationNode>()) {
    gather_evidence(impl->antecedent, ev);
    gather_evidence(impl->consequent, ev);
  } else if (const auto *sb = ast->as<SeqBinopNode>()) {
    gather_evidence(sb->lhs, ev);
    gather_evidence(sb->rhs, ev);
  } else if (const auto *lv = ast->as<LivenessNode>())
    for (const auto &o : lv->operands)
      gather_evidence(o, ev);
  else if (const auto *di = ast->as<DisableIffNode>()) {
    gather_evidence(di->cond, ev);
    gather_evidence(di->body, ev);
  } else if (const auto *lb = ast->as<LabeledNode>())
    gather_evidence(lb->body, ev);
}

bool all_caps_param(const std::string &flat) {
  if (flat.size() < 3)
    return false;
  bool has_letter = false;
  for (char c : flat) {
    if (std::islower(static_cast<unsigned char>(c)))
      return false;
    if (std::isupper(static_cast<unsigned char>(c)))
      has_letter = true;
  }
  return has_letter;
}

IdentifierKind resolve_kind(const Identifier &id, const KindEvidence &ev) {
  if (ev.clocks.count(id.flat))
    return IdentifierKind::Clock;
  if (all_caps_param(id.flat))
    return IdentifierKind::Parameter;
  if (ev.callees.count(id.flat))
    return IdentifierKind::FunctionStub;
  if (ev.mda.count(id.flat))
    return IdentifierKind::Mda;
  return IdentifierKind::Wire;
}

std::string replace_word(const std::string &text, const std::string &from,
                         const std::string &to) {
  auto word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text.compare(i, from.size(), from) == 0 &&
        (i == 0 || !word(text[i - 1])) &&
        (i + from.size() >= text.size() || !word(text[i + from.size()]))) {
      out += to;
      i += from.size();
      continue;
    }
    out += text[i++];
  }
  return out;
}

// Statement-form inputs keep their assert/assume/cover wrapper through
// normalization; peel it here so the property itself can be parsed.
std::string peel_statement(const std::string &text) {
  auto stream = [&]() -> std::string {
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    };
    skip();
    // optional label
    std::size_t save = i;
    if (i < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_' || text[i] == '$'))
        ++i;
      skip();
      if (i < text.size() && text[i] == ':' &&
          (i + 1 >= text.size() || text[i + 1] != ':'))
        ++i;
      else
        i = save;
    }
    skip();
    for (const char *kw : {"assert", "assume", "cover"}) {
      std::size_t len = std::string(kw).size();
      if (text.compare(i, len, kw) == 0) {
        std::size_t j = i + len;
        while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j])))
          ++j;
        if (text.compare(j, 8, "property") == 0) {
          j += 8;
          while (j < text.size() &&
                 std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
          if (j < text.size() && text[j] == '(') {
            int depth = 0;
            for (std::size_t k = j; k < text.size(); ++k) {
              if (text[k] == '(')
                ++depth;
              else if (text[k] == ')' && --depth == 0)
                return text.substr(j + 1, k - j - 1);
            }
          }
        }
      }
    }
    return text;
  };
  return stream();
}

std::string function_stub_text(const std::string &name) {
  std::string s = "  function automatic logic [31:0] " + name + "(\n";
  for (int a = 0; a < 8; ++a) {
    s += "      input logic [31:0] a" + std::to_string(a) + " = 32'd0";
    s += a == 7 ? ");\n" : ",\n";
  }
  s += "    return 32'd0;\n  endfunction\n";
  return s;
}

} // namespace

const char *to_string(IdentifierKind kind) {
  switch (kind) {
  case IdentifierKind::Clock: return "clock";
  case IdentifierKind::Parameter: return "parameter";
  case IdentifierKind::FunctionStub: return "function";
  case IdentifierKind::Mda: return "mda";
  case IdentifierKind::Wire: return "wire";
  }
  return "?";
}

IdentifierKind classify_identifier(const Identifier &id,
                                   const AstPtr &context) {
  KindEvidence ev;
  gather_evidence(context, ev);
  return resolve_kind(id, ev);
}

WrapperModule synthesize_wrapper(const SourceText &src,
                                 const WrapperOptions &opts) {
  NormalizeOptions nopts;
  nopts.profile = opts.profile;
  auto norm = normalize(src, nopts);

  std::string prop_text = peel_statement(norm.after.raw);
  AstPtr ast;
  try {
    ast = parse(prop_text);
  } catch (const Error &e) {
    throw WrapError(std::string("assertion does not parse: ") + e.what());
  }

  // strip a label off the body; it re-attaches outside assert property
  std::string label;
  AstPtr body_ast = ast;
  if (const auto *lb = ast->as<LabeledNode>()) {
    label = lb->label;
    body_ast = lb->body;
  }

  KindEvidence ev;
  gather_evidence(body_ast, ev);
  auto ids = free_identifiers(body_ast);

  WrapperModule mod;
  mod.normalization = norm.report;

  bool clocked = !ev.clocks.empty();
  std::string injected;
  if (!clocked) {
    injected = "clk";
    for (const auto &id : ids)
      if (id.flat == "clk") {
        injected = "__pec_clk";
        break;
      }
    mod.injected_clock = injected;
  }

  // one declaration per declaration base; MDA roots subsume their selects
  std::map<std::string, WrapperDeclaration> decls;
  for (const auto &id : ids) {
    WrapperDeclaration d;
    d.id = id;
    d.kind = resolve_kind(id, ev);
    d.declared_name = id.decl_base;
    if (id.trailing_selects > 0 && d.kind != IdentifierKind::Mda &&
        d.kind != IdentifierKind::Clock) {
      // single trailing select on a 32-bit wire; declare the base
      d.declared_name = id.decl_base;
    }
    auto it = decls.find(d.declared_name);
    if (it != decls.end()) {
      // an MDA sighting wins over a plain sighting of the same base
      if (d.kind == IdentifierKind::Mda)
        it->second.kind = IdentifierKind::Mda;
      continue;
    }
    decls.emplace(d.declared_name, std::move(d));
  }

  std::string body_text = render(body_ast);

  // keyword collisions are renamed in both declaration and body
  for (auto &[base, d] : decls) {
    if (sv_keywords().count(d.declared_name)) {
      std::string renamed = d.declared_name + "_w";
      body_text = replace_word(body_text, d.declared_name, renamed);
      d.declared_name = renamed;
    }
  }

  if (!clocked) {
    WrapperDeclaration d;
    SignalRefNode ref{{PathSeg{injected, {}}}};
    d.id = identifier_of(ref);
    d.kind = IdentifierKind::Clock;
    d.declared_name = injected;
    decls.emplace(injected, std::move(d));
    body_text = "@(posedge " + injected + ") " + body_text;
  }

  // emitted declaration text per kind
  for (auto &[base, d] : decls) {
    switch (d.kind) {
    case IdentifierKind::Clock:
      d.emitted = "input logic " + d.declared_name;
      break;
    case IdentifierKind::Parameter:
      d.emitted = "parameter logic [31:0] " + d.declared_name + " = 32'd4";
      break;
    case IdentifierKind::FunctionStub:
      d.emitted = function_stub_text(d.declared_name);
      break;
    case IdentifierKind::Mda:
      d.emitted = "input logic [31:0][31:0][31:0] " + d.declared_name;
      break;
    case IdentifierKind::Wire:
      d.emitted = "input logic [31:0] " + d.declared_name;
      break;
    }
  }

  // declaration order: clocks, parameters, functions, MDAs, wires;
  // alphabetical within each kind
  auto kind_rank = [](IdentifierKind k) {
    switch (k) {
    case IdentifierKind::Clock: return 0;
    case IdentifierKind::Parameter: return 1;
    case IdentifierKind::FunctionStub: return 2;
    case IdentifierKind::Mda: return 3;
    case IdentifierKind::Wire: return 4;
    }
    return 5;
  };
  for (auto &[_, d] : decls)
    mod.declarations.push_back(d);
  std::sort(mod.declarations.begin(), mod.declarations.end(),
            [&](const WrapperDeclaration &a, const WrapperDeclaration &b) {
              int ra = kind_rank(a.kind), rb = kind_rank(b.kind);
              if (ra != rb)
                return ra < rb;
              return a.declared_name < b.declared_name;
            });

  mod.body = body_text;

  // module emission
  std::vector<const WrapperDeclaration *> params, ports, funcs;
  for (const auto &d : mod.declarations) {
    if (d.kind == IdentifierKind::Parameter)
      params.push_back(&d);
    else if (d.kind == IdentifierKind::FunctionStub)
      funcs.push_back(&d);
    else
      ports.push_back(&d);
  }

  std::string text = "module " + mod.module_name;
  if (!params.empty()) {
    text += " #(\n";
    for (std::size_t i = 0; i < params.size(); ++i) {
      text += "  " + params[i]->emitted;
      text += (i + 1 == params.size()) ? "\n" : ",\n";
    }
    text += ")";
  }
  if (!ports.empty()) {
    text += " (\n";
    for (std::size_t i = 0; i < ports.size(); ++i) {
      text += "  " + ports[i]->emitted;
      text += (i + 1 == ports.size()) ? "\n" : ",\n";
    }
    text += ")";
  }
  text += ";\n\n";
  for (const auto *f : funcs)
    text += f->emitted + "\n";
  text += "  ";
  if (!label.empty())
    text += label + ": ";
  text += "assert property (" + body_text + ");\n\nendmodule\n";
  mod.text = std::move(text);
  return mod;
}

WrapperShell parse_wrapper_shell(const std::string &module_text) {
  TokenStream ts = tokenize(module_text);
  const auto &toks = ts.tokens;
  std::size_t i = 0;
  auto fail = [&](const char *what) -> void {
    throw WrapError(std::string("module shell: expected ") + what);
  };
  auto is_kw = [&](std::size_t j, const char *kw) {
    return j < toks.size() && toks[j].kind == TokenKind::Keyword &&
           toks[j].text == kw;
  };

  WrapperShell shell;
  if (!is_kw(i, "module"))
    fail("module");
  ++i;
  if (toks[i].kind != TokenKind::Ident)
    fail("module name");
  shell.module_name = toks[i++].text;

  auto parse_packed_dims = [&]() {
    int dims = 0;
    while (toks[i].kind == TokenKind::LBracket) {
      while (toks[i].kind != TokenKind::RBracket)
        ++i;
      ++i;
      ++dims;
    }
    return dims;
  };

  auto parse_decl = [&](bool in_params) {
    if (is_kw(i, "parameter")) {
      ++i;
      if (is_kw(i, "logic"))
        ++i;
      parse_packed_dims();
      if (toks[i].kind != TokenKind::Ident)
        fail("parameter name");
      shell.declared.emplace_back(toks[i++].text, IdentifierKind::Parameter);
      if (toks[i].kind == TokenKind::Assign) {
        ++i;
        if (toks[i].kind != TokenKind::Number)
          fail("parameter default");
        ++i;
      }
      return;
    }
    if (is_kw(i, "input")) {
      ++i;
      if (is_kw(i, "logic"))
        ++i;
      int dims = parse_packed_dims();
      if (toks[i].kind != TokenKind::Ident)
        fail("port name");
      IdentifierKind kind = dims == 0   ? IdentifierKind::Clock
                            : dims >= 3 ? IdentifierKind::Mda
                                        : IdentifierKind::Wire;
      shell.declared.emplace_back(toks[i++].text, kind);
      return;
    }
    (void)in_params;
    fail("declaration");
  };

  // #( parameter list ) and ( port list ) both scan as '(' groups
  while (toks[i].kind != TokenKind::Semicolon) {
    if (toks[i].kind == TokenKind::Hash) {
      ++i;
      continue;
    }
    if (toks[i].kind == TokenKind::LParen) {
      ++i;
      while (toks[i].kind != TokenKind::RParen) {
        parse_decl(false);
        if (toks[i].kind == TokenKind::Comma)
          ++i;
      }
      ++i;
      continue;
    }
    if (toks[i].kind == TokenKind::Eof)
      fail("';' after module header");
    ++i;
  }
  ++i; // ';'

  // function stubs
  while (is_kw(i, "function")) {
    ++i;
    if (is_kw(i, "automatic"))
      ++i;
    if (is_kw(i, "logic"))
      ++i;
    parse_packed_dims();
    if (toks[i].kind != TokenKind::Ident)
      fail("function name");
    shell.declared.emplace_back(toks[i++].text, IdentifierKind::FunctionStub);
    while (!is_kw(i, "endfunction")) {
      if (toks[i].kind == TokenKind::Eof)
        fail("endfunction");
      ++i;
    }
    ++i;
  }

  // optional label
  if (toks[i].kind == TokenKind::Ident &&
      i + 1 < toks.size() && toks[i + 1].kind == TokenKind::Colon)
    i += 2;

  if (!(is_kw(i, "assert") || is_kw(i, "assume") || is_kw(i, "cover")))
    fail("assert property");
  ++i;
  if (!is_kw(i, "property"))
    fail("property keyword");
  ++i;
  if (toks[i].kind != TokenKind::LParen)
    fail("property group");

  // textual extraction of the balanced group, then a property parse
  std::size_t open_pos = toks[i].pos;
  int depth = 0;
  std::size_t close_pos = std::string::npos;
  for (std::size_t p = open_pos; p < module_text.size(); ++p) {
    if (module_text[p] == '(')
      ++depth;
    else if (module_text[p] == ')' && --depth == 0) {
      close_pos = p;
      break;
    }
  }
  if (close_pos == std::string::npos)
    fail("balanced property group");
  shell.property =
      parse(module_text.substr(open_pos + 1, close_pos - open_pos - 1));
  return shell;
}

} // namespace svaeq
