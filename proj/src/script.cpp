#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "singular/pipeline.hpp"

namespace singular {

namespace {

template <class... Args>
std::string concat(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

enum class TokenKind { Word, Int, Symbol };

struct Token {
  TokenKind kind;
  std::string text;
  int column;
  long value = 0;
};

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string suggestion(const std::string& word, std::initializer_list<const char*> options) {
  const char* best = nullptr;
  std::size_t best_d = 3;
  for (const char* o : options) {
    std::size_t d = edit_distance(word, o);
    if (d < best_d) {
      best_d = d;
      best = o;
    }
  }
  return best ? concat("; did you mean '", best, "'?") : std::string();
}

class LineParser {
 public:
  LineParser(int line, const std::string& text) : line_(line), end_column_(static_cast<int>(text.size()) + 1) {
    std::size_t i = 0;
    while (i < text.size()) {
      char ch = text[i];
      int col = static_cast<int>(i) + 1;
      if (ch == '#') break;
      if (std::isspace(static_cast<unsigned char>(ch))) {
        ++i;
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        tokens_.push_back({TokenKind::Word, text.substr(i, j - i), col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
                 (ch == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        std::string digits = text.substr(i, j - i);
        if (digits.size() > 9) fail(ErrorKind::Syntax, col, concat("integer '", digits, "' is too large"));
        tokens_.push_back({TokenKind::Int, digits, col, std::stol(digits)});
        i = j;
      } else if (ch == '(' || ch == ')' || ch == ',' || ch == '=') {
        tokens_.push_back({TokenKind::Symbol, std::string(1, ch), col});
        ++i;
      } else {
        fail(ErrorKind::Syntax, col, concat("unexpected character '", ch, "'"));
      }
    }
  }

  bool empty() const { return tokens_.empty(); }
  bool done() const { return pos_ >= tokens_.size(); }
  int column() const { return done() ? end_column_ : tokens_[pos_].column; }

  [[noreturn]] void fail(ErrorKind kind, int column, const std::string& message) const {
    throw ScriptError(kind, line_, column, message);
  }

  const Token* peek() const { return done() ? nullptr : &tokens_[pos_]; }

  const Token& expect_word(std::initializer_list<const char*> options, const char* what) {
    const Token* t = peek();
    if (!t) fail(ErrorKind::Syntax, column(), concat("expected ", what, " at end of line"));
    if (t->kind == TokenKind::Word)
      for (const char* o : options)
        if (t->text == o) return tokens_[pos_++];
    fail(ErrorKind::Syntax, t->column,
         concat("expected ", what, ", found '", t->text, "'",
                t->kind == TokenKind::Word ? suggestion(t->text, options) : std::string()));
  }

  const Token& expect_name(const char* what) {
    const Token* t = peek();
    if (!t) fail(ErrorKind::Syntax, column(), concat("expected ", what, " at end of line"));
    if (t->kind != TokenKind::Word) fail(ErrorKind::Syntax, t->column, concat("expected ", what, ", found '", t->text, "'"));
    return tokens_[pos_++];
  }

  const Token& expect_int(const char* what) {
    const Token* t = peek();
    if (!t) fail(ErrorKind::Syntax, column(), concat("expected ", what, " at end of line"));
    if (t->kind != TokenKind::Int) fail(ErrorKind::Syntax, t->column, concat("expected ", what, ", found '", t->text, "'"));
    return tokens_[pos_++];
  }

  const Token& expect_symbol(char symbol) {
    const Token* t = peek();
    if (!t) fail(ErrorKind::Syntax, column(), concat("expected '", symbol, "' at end of line"));
    if (t->kind != TokenKind::Symbol || t->text[0] != symbol)
      fail(ErrorKind::Syntax, t->column, concat("expected '", symbol, "', found '", t->text, "'"));
    return tokens_[pos_++];
  }

  bool accept_symbol(char symbol) {
    const Token* t = peek();
    if (t && t->kind == TokenKind::Symbol && t->text[0] == symbol) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_end() {
    if (const Token* t = peek()) fail(ErrorKind::Syntax, t->column, concat("unexpected '", t->text, "' after statement"));
  }

 private:
  int line_;
  int end_column_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct ResolvedSurface {
  GenusChain chain;
  std::size_t index;
};

struct OpSite {
  int loop_column;
  int partner_column;
};

}  // namespace

ScriptError::ScriptError(ErrorKind kind, int line, int column, const std::string& message)
    : TopologyError(kind, concat("line ", line, ", col ", column, ": ", message)),
      line_(line),
      column_(column),
      message_(message) {}

SingularizationPlan parse_script(const std::string& text) {
  SingularizationPlan plan;
  std::map<std::string, ResolvedSurface> surfaces;
  std::map<std::string, int> used_by;
  std::vector<OpSite> sites;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    LineParser p(line_no, raw);
    if (p.empty()) continue;

    const Token& head = p.expect_word({"surface", "loop", "collapse", "zip", "identify"}, "a statement");
    if (head.text == "surface") {
      SurfaceDecl decl;
      decl.line = line_no;
      const Token& name = p.expect_name("a surface name");
      decl.name = name.text;
      if (surfaces.contains(decl.name))
        p.fail(ErrorKind::NameClash, name.column, concat("surface '", decl.name, "' is already declared"));
      p.expect_word({"genus"}, "'genus'");
      const Token& g = p.expect_int("a genus");
      if (g.value < 0 || g.value > 32) p.fail(ErrorKind::MalformedInput, g.column, "genus must lie in 0..32");
      decl.genus = static_cast<int>(g.value);
      int res_column = g.column;
      if (!p.done()) {
        p.expect_word({"res"}, "'res'");
        const Token& r = p.expect_int("a resolution");
        res_column = r.column;
        decl.res = static_cast<int>(r.value);
      }
      p.expect_end();

      GenusChain chain;
      try {
        if (decl.genus == 0) {
          int refinement = decl.res.value_or(1);
          if (refinement < 0 || refinement > 4)
            p.fail(ErrorKind::DegenerateGrid, res_column, "sphere refinement must lie in 0..4");
          chain = GenusChain{build_sphere(refinement), 0, 0, 0};
        } else {
          int size = decl.res.value_or(4);
          if (size > 64) p.fail(ErrorKind::DegenerateGrid, res_column, "grid size must be at most 64");
          chain = build_genus_chain(decl.genus, size, size);
        }
      } catch (const ScriptError&) {
        throw;
      } catch (const TopologyError& e) {
        p.fail(e.kind(), res_column, e.what());
      }
      plan.bundle.surfaces.push_back({decl.name, chain.complex, decl.genus});
      surfaces.emplace(decl.name, ResolvedSurface{std::move(chain), plan.surfaces.size()});
      plan.surfaces.push_back(std::move(decl));
    } else if (head.text == "loop") {
      LoopDecl decl;
      decl.line = line_no;
      const Token& name = p.expect_name("a loop name");
      decl.name = name.text;
      if (plan.loops.contains(decl.name))
        p.fail(ErrorKind::NameClash, name.column, concat("loop '", decl.name, "' is already declared"));
      p.expect_symbol('=');
      const Token& sel = p.expect_word({"handle", "tunnel", "separating", "cycle"}, "a loop selector");
      p.expect_symbol('(');
      const Token& surf = p.expect_name("a surface name");
      decl.surface = surf.text;
      auto it = surfaces.find(decl.surface);
      if (it == surfaces.end())
        p.fail(ErrorKind::UnknownName, surf.column, concat("unknown surface '", decl.surface, "'"));
      p.expect_symbol(',');
      int arg_column = p.column();
      if (sel.text == "cycle") {
        decl.selector = LoopSelector::Cycle;
        decl.vertices.push_back(static_cast<int>(p.expect_int("a vertex id").value));
        while (!p.accept_symbol(')')) {
          p.accept_symbol(',');
          decl.vertices.push_back(static_cast<int>(p.expect_int("a vertex id").value));
        }
      } else {
        decl.selector = sel.text == "handle"   ? LoopSelector::Handle
                        : sel.text == "tunnel" ? LoopSelector::Tunnel
                                               : LoopSelector::Separating;
        decl.index = static_cast<int>(p.expect_int("a loop index").value);
        p.expect_symbol(')');
      }
      p.expect_end();

      const GenusChain& chain = it->second.chain;
      LoopMarking marking;
      try {
        if (decl.selector == LoopSelector::Cycle) {
          std::vector<VertexId> cycle;
          for (int v : decl.vertices) {
            if (!chain.complex.has_vertex(VertexId(v)))
              p.fail(ErrorKind::NotACycle, arg_column, concat("surface '", decl.surface, "' has no vertex ", v));
            cycle.emplace_back(v);
          }
          marking = validate_simple_cycle(chain.complex, std::move(cycle), decl.surface);
        } else {
          if (chain.genus == 0)
            p.fail(ErrorKind::NoSuchLoop, sel.column,
                   concat("sphere '", decl.surface, "' has no ", sel.text, " loops"));
          CanonicalKind kind = decl.selector == LoopSelector::Handle   ? CanonicalKind::Handle
                               : decl.selector == LoopSelector::Tunnel ? CanonicalKind::Tunnel
                                                                       : CanonicalKind::Separating;
          marking = canonical_loop(chain, kind, decl.index, decl.surface);
        }
      } catch (const ScriptError&) {
        throw;
      } catch (const TopologyError& e) {
        p.fail(e.kind(), arg_column, e.what());
      }
      plan.loops.emplace(decl.name, std::move(marking));
      plan.loop_decls.push_back(std::move(decl));
    } else {
      OpStmt op;
      op.line = line_no;
      op.kind = head.text == "collapse" ? OperationKind::Collapse
                : head.text == "zip"    ? OperationKind::Zip
                                        : OperationKind::Identify;
      auto take_loop = [&](std::string& slot) {
        const Token& t = p.expect_name("a loop name");
        slot = t.text;
        if (!plan.loops.contains(slot))
          p.fail(ErrorKind::UnknownName, t.column, concat("unknown loop '", slot, "'"));
        auto prior = used_by.find(slot);
        if (prior != used_by.end())
          p.fail(ErrorKind::LoopReuse, t.column,
                 concat("loop '", slot, "' is already operated on at line ", prior->second));
        return t.column;
      };
      OpSite site{p.column(), 0};
      take_loop(op.loop);
      LoopMarking& marking = plan.loops.at(op.loop);
      if (op.kind == OperationKind::Zip) {
        ZipOp zop;
        if (!p.done()) {
          p.expect_word({"at"}, "'at'");
          const Token& a = p.expect_int("a vertex id");
          const Token& b = p.expect_int("a vertex id");
          op.at = std::pair{static_cast<int>(a.value), static_cast<int>(b.value)};
          if (a.value == b.value) p.fail(ErrorKind::DegenerateArc, b.column, "zip endpoints coincide");
          for (const Token* t : {&a, &b})
            if (!marking.contains(VertexId(static_cast<int>(t->value))))
              p.fail(ErrorKind::ArcMismatch, t->column,
                     concat("vertex ", t->text, " is not on loop '", op.loop, "'"));
          zop = ZipOp{VertexId(op.at->first), VertexId(op.at->second)};
        }
        marking.operation = zop;
      } else if (op.kind == OperationKind::Identify) {
        const Token* t = p.peek();
        if (t && t->kind == TokenKind::Word && t->text == op.loop)
          p.fail(ErrorKind::SelfIdentification, t->column,
                 concat("loop '", op.loop, "' cannot be identified with itself"));
        site.partner_column = take_loop(op.partner);
        while (!p.done()) {
          const Token& opt = p.expect_word({"offset", "reverse"}, "'offset' or 'reverse'");
          if (opt.text == "offset") {
            if (op.offset) p.fail(ErrorKind::Syntax, opt.column, "offset given twice");
            op.offset = static_cast<int>(p.expect_int("an offset").value);
          } else {
            if (op.reverse) p.fail(ErrorKind::Syntax, opt.column, "reverse given twice");
            op.reverse = true;
          }
        }
        marking.operation = IdentifyOp{op.partner, op.offset.value_or(0), op.reverse};
        plan.loops.at(op.partner).operation = IdentifyOp{op.loop, op.offset.value_or(0), op.reverse};
        used_by.emplace(op.partner, line_no);
      } else {
        marking.operation = CollapseOp{};
      }
      p.expect_end();
      used_by.emplace(op.loop, line_no);
      sites.push_back(site);
      plan.operations.push_back(std::move(op));
    }
  }

  // Disjointness across all operated loops, reported at the later statement.
  struct Origin {
    std::size_t op;
    int column;
    std::string name;
  };
  std::vector<LoopMarking> operated;
  std::vector<Origin> origin;
  for (std::size_t i = 0; i < plan.operations.size(); ++i) {
    const OpStmt& op = plan.operations[i];
    operated.push_back(plan.loops.at(op.loop));
    origin.push_back({i, sites[i].loop_column, op.loop});
    if (op.kind == OperationKind::Identify) {
      operated.push_back(plan.loops.at(op.partner));
      origin.push_back({i, sites[i].partner_column, op.partner});
    }
  }
  DisjointnessReport disjoint = check_pairwise_disjoint(operated);
  if (!disjoint.ok()) {
    auto [a, b] = disjoint.conflicts.front();
    if (a > b) std::swap(a, b);
    throw ScriptError(ErrorKind::DisjointnessConflict, plan.operations[origin[b].op].line, origin[b].column,
                      concat("loop '", origin[b].name, "' shares a vertex with loop '", origin[a].name, "'"));
  }
  return plan;
}

std::string render_script(const SingularizationPlan& plan) {
  std::ostringstream out;
  for (const SurfaceDecl& s : plan.surfaces) {
    out << "surface " << s.name << " genus " << s.genus;
    if (s.res) out << " res " << *s.res;
    out << '\n';
  }
  for (const LoopDecl& l : plan.loop_decls) {
    out << "loop " << l.name << " = ";
    switch (l.selector) {
      case LoopSelector::Handle: out << "handle(" << l.surface << ", " << l.index << ")"; break;
      case LoopSelector::Tunnel: out << "tunnel(" << l.surface << ", " << l.index << ")"; break;
      case LoopSelector::Separating: out << "separating(" << l.surface << ", " << l.index << ")"; break;
      case LoopSelector::Cycle:
        out << "cycle(" << l.surface;
        for (int v : l.vertices) out << ", " << v;
        out << ")";
        break;
    }
    out << '\n';
  }
  for (const OpStmt& op : plan.operations) {
    out << to_string(op.kind) << ' ' << op.loop;
    if (op.kind == OperationKind::Zip && op.at) out << " at " << op.at->first << ' ' << op.at->second;
    if (op.kind == OperationKind::Identify) {
      out << ' ' << op.partner;
      if (op.offset) out << " offset " << *op.offset;
      if (op.reverse) out << " reverse";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace singular
