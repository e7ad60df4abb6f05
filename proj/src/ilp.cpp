#include "bmg/ilp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "bmg/error.hpp"

namespace bmg {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kMode: return "mode";
    case Family::kProper: return "proper";
    case Family::kSinkFree: return "sf";
    case Family::kInformative: return "inf";
    case Family::kForbidden: return "forb";
    case Family::kDense: return "dense";
    case Family::kInference: return "rule";
  }
  return "mode";
}

std::size_t IlpModel::count(Family f) const {
  return static_cast<std::size_t>(std::count(families.begin(), families.end(), f));
}

std::size_t IlpModel::arc_variable_count() const {
  return static_cast<std::size_t>(
      std::count_if(arc_of.begin(), arc_of.end(), [](const auto& p) { return p.first >= 0; }));
}

std::size_t IlpModel::triple_variable_count() const {
  return static_cast<std::size_t>(
      std::count_if(triple_of.begin(), triple_of.end(), [](const Triple& t) { return t.a >= 0; }));
}

namespace {

bool lp_safe(std::string_view id) {
  if (id.empty()) return false;
  for (char ch : id)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.')) return false;
  return true;
}

std::vector<LinearTerm> normalized(std::vector<LinearTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](auto a, auto b) { return a.var < b.var; });
  std::vector<LinearTerm> out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().var == t.var)
      out.back().coef += t.coef;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](auto t) { return t.coef == 0; }), out.end());
  return out;
}

}  // namespace

IlpModel build_ilp(const ColoredDigraph& g, EditMode mode) {
  if (!g.is_properly_colored()) throw InputError("ilp: graph is not properly colored");
  if (g.color_count() < 2) throw InputError("ilp: at least two colors are required");
  const int n = g.size();
  for (const auto& id : g.ids())
    if (!lp_safe(id)) throw InputError("ilp: vertex id '" + id + "' is not a valid LP identifier");

  IlpModel m;
  m.vertex_ids = g.ids();
  std::set<std::string> names;
  auto add_var = [&](std::string name, std::pair<int, int> arc, Triple t) {
    if (!names.insert(name).second) throw InputError("ilp: variable name collision on '" + name + "'");
    m.variables.push_back(std::move(name));
    m.arc_of.push_back(arc);
    m.triple_of.push_back(t);
    return static_cast<int>(m.variables.size() - 1);
  };

  std::vector<int> e(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) e[x * n + y] = add_var("e_" + g.id(x) + "_" + g.id(y), {x, y}, {-1, -1, -1});
  std::map<Triple, int> t;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (Triple tr : {Triple{a, b, c}, Triple{a, c, b}, Triple{b, c, a}})
          t[tr] = add_var("t_" + g.id(tr.a) + "_" + g.id(tr.b) + "_" + g.id(tr.c), {-1, -1}, tr);
  auto tv = [&](int x, int y, int z) { return t.at(Triple::make(x, y, z)); };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) m.objective.push_back({e[x * n + y], g.has_arc(x, y) ? -1 : 1});
  m.objective = normalized(std::move(m.objective));
  m.objective_constant = static_cast<int>(g.arc_count());

  std::map<Family, int> counter;
  auto add = [&](Family f, std::vector<LinearTerm> terms, Sense s, int rhs) {
    Constraint c;
    c.name = std::string(to_string(f)) + "_" + std::to_string(++counter[f]);
    c.terms = normalized(std::move(terms));
    c.sense = s;
    c.rhs = rhs;
    m.constraints.push_back(std::move(c));
    m.families.push_back(f);
  };

  if (mode != EditMode::kEdit)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y)
          add(Family::kMode, {{e[x * n + y], 1}}, mode == EditMode::kDelete ? Sense::kLe : Sense::kGe,
              g.has_arc(x, y) ? 1 : 0);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && g.color_index(x) == g.color_index(y)) add(Family::kProper, {{e[x * n + y], 1}}, Sense::kEq, 0);

  for (int x = 0; x < n; ++x)
    for (int s = 0; s < g.color_count(); ++s) {
      if (s == g.color_index(x)) continue;
      std::vector<LinearTerm> terms;
      for (int y = 0; y < n; ++y)
        if (g.color_index(y) == s) terms.push_back({e[x * n + y], 1});
      add(Family::kSinkFree, std::move(terms), Sense::kGe, 1);
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x || g.color_index(y) == g.color_index(x)) continue;
      for (int y2 = 0; y2 < n; ++y2) {
        if (y2 == x || y2 == y || g.color_index(y2) != g.color_index(y)) continue;
        add(Family::kInformative, {{e[x * n + y], 1}, {e[x * n + y2], -1}, {tv(x, y, y2), -1}}, Sense::kLe, 0);
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x || g.color_index(y) == g.color_index(x)) continue;
      for (int y2 = y + 1; y2 < n; ++y2) {
        if (y2 == x || g.color_index(y2) != g.color_index(y)) continue;
        add(Family::kForbidden, {{e[x * n + y], 1}, {e[x * n + y2], 1}, {tv(y, y2, x), -1}}, Sense::kLe, 1);
      }
    }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        add(Family::kDense, {{tv(a, b, c), 1}, {tv(a, c, b), 1}, {tv(b, c, a), 1}}, Sense::kEq, 1);

  // Every ordered 4-tuple; the inequality is not symmetric in its roles.
  std::set<std::vector<std::pair<int, int>>> seen;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          auto terms = normalized({{tv(a, b, c), 2}, {tv(a, d, b), 2}, {tv(b, d, c), -1}, {tv(a, d, c), -1}});
          std::vector<std::pair<int, int>> key;
          for (auto [v, k] : terms) key.emplace_back(v, k);
          if (!seen.insert(key).second) continue;
          add(Family::kInference, std::move(terms), Sense::kLe, 2);
        }
  return m;
}

namespace {

std::string term_text(const LinearTerm& t, const std::vector<std::string>& vars, bool first) {
  std::string s;
  const int mag = t.coef < 0 ? -t.coef : t.coef;
  if (t.coef < 0)
    s += first ? "- " : " - ";
  else if (!first)
    s += " + ";
  if (mag != 1) s += std::to_string(mag) + " ";
  s += vars[t.var];
  return s;
}

void emit_wrapped(std::string& out, const std::string& head, const std::vector<std::string>& pieces,
                  const std::string& tail) {
  constexpr std::size_t kWidth = 78;
  std::string line = head;
  for (const auto& p : pieces) {
    if (line.size() + p.size() > kWidth && line.size() > 3) {
      out += line + "\n";
      line = "  ";
    }
    line += p;
  }
  if (line.size() + tail.size() > kWidth && line.size() > 3) {
    out += line + "\n";
    line = "  ";
  }
  out += line + tail + "\n";
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::kLe: return "<=";
    case Sense::kEq: return "=";
    case Sense::kGe: return ">=";
  }
  return "<=";
}

}  // namespace

std::string export_lp(const IlpModel& m) {
  std::string out = "\\ binary-explainable BMG arc modification model\nMinimize\n";
  std::vector<std::string> pieces;
  for (std::size_t i = 0; i < m.objective.size(); ++i) pieces.push_back(term_text(m.objective[i], m.variables, i == 0));
  std::string tail;
  if (m.objective_constant != 0 || pieces.empty()) {
    const int c = m.objective_constant;
    tail = pieces.empty() ? std::to_string(c) : (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c);
  }
  emit_wrapped(out, " obj: ", pieces, tail);
  out += "Subject To\n";
  for (const auto& c : m.constraints) {
    pieces.clear();
    for (std::size_t i = 0; i < c.terms.size(); ++i) pieces.push_back(term_text(c.terms[i], m.variables, i == 0));
    if (pieces.empty()) pieces.push_back("0 " + m.variables.front());
    emit_wrapped(out, " " + c.name + ": ", pieces, std::string(" ") + sense_text(c.sense) + " " + std::to_string(c.rhs));
  }
  out += "Binary\n";
  pieces.clear();
  for (const auto& v : m.variables) pieces.push_back(" " + v);
  emit_wrapped(out, "", pieces, "");
  out += "End\n";
  return out;
}

namespace {

struct Token {
  enum Kind { kIdent, kNumber, kPlus, kMinus, kColon, kLe, kGe, kEq } kind;
  std::string text;
  long long value = 0;
  int line = 0;
};

[[noreturn]] void lp_fail(int line, const std::string& what) {
  throw InputError("lp line " + std::to_string(line) + ": " + what);
}

bool ident_start(char ch) {
  return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.';
}
bool ident_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.';
}

void tokenize_line(std::string_view s, int line, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ident_start(ch)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Token::kIdent, std::string(s.substr(i, j - i)), 0, line});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && (s[j] == '.' || s[j] == 'e' || s[j] == 'E')) lp_fail(line, "only integer coefficients are supported");
      long long v = 0;
      auto [p, ec] = std::from_chars(s.data() + i, s.data() + j, v);
      if (ec != std::errc() || v > std::numeric_limits<int>::max()) lp_fail(line, "number out of range");
      out.push_back({Token::kNumber, std::string(s.substr(i, j - i)), v, line});
      i = j;
    } else if (ch == '+') {
      out.push_back({Token::kPlus, "+", 0, line});
      ++i;
    } else if (ch == '-') {
      out.push_back({Token::kMinus, "-", 0, line});
      ++i;
    } else if (ch == ':') {
      out.push_back({Token::kColon, ":", 0, line});
      ++i;
    } else if (ch == '<' || ch == '>' || ch == '=') {
      std::size_t j = i + 1;
      if (j < s.size() && s[j] == '=') ++j;
      if (ch == '=' && j < s.size() && (s[j] == '<' || s[j] == '>')) {
        out.push_back({s[j] == '<' ? Token::kLe : Token::kGe, "", 0, line});
        i = j + 1;
        continue;
      }
      out.push_back({ch == '<' ? Token::kLe : ch == '>' ? Token::kGe : Token::kEq, "", 0, line});
      i = j;
    } else {
      lp_fail(line, std::string("unexpected character '") + ch + "'");
    }
  }
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

struct RawRow {
  std::string name;
  std::vector<std::pair<std::string, int>> terms;
  int constant = 0;
  Sense sense = Sense::kLe;
  int rhs = 0;
  int line = 0;
};

// expr := [sign] [number] ident | [sign] number, repeated.
std::size_t parse_expr(const std::vector<Token>& tk, std::size_t i, RawRow& row, bool allow_constant) {
  bool first = true;
  while (i < tk.size()) {
    int sign = 1;
    bool had_sign = false;
    while (i < tk.size() && (tk[i].kind == Token::kPlus || tk[i].kind == Token::kMinus)) {
      if (tk[i].kind == Token::kMinus) sign = -sign;
      had_sign = true;
      ++i;
    }
    if (i >= tk.size()) {
      if (had_sign) lp_fail(tk.back().line, "dangling sign");
      break;
    }
    if (!first && !had_sign) break;
    if (tk[i].kind == Token::kNumber) {
      const int v = static_cast<int>(tk[i].value);
      ++i;
      if (i < tk.size() && tk[i].kind == Token::kIdent) {
        row.terms.emplace_back(tk[i].text, sign * v);
        ++i;
      } else {
        if (!allow_constant) lp_fail(tk[i - 1].line, "constant term on the left-hand side");
        row.constant += sign * v;
      }
    } else if (tk[i].kind == Token::kIdent) {
      row.terms.emplace_back(tk[i].text, sign);
      ++i;
    } else {
      if (had_sign) lp_fail(tk[i].line, "expected a term after the sign");
      break;
    }
    first = false;
  }
  return i;
}

}  // namespace

IlpModel parse_lp(std::string_view text) {
  enum class Section { kNone, kObjective, kConstraints, kBinary, kEnd };
  Section section = Section::kNone;
  std::vector<Token> obj_tokens, con_tokens;
  std::vector<std::pair<std::string, int>> binaries;

  std::size_t pos = 0;
  int lineno = 0;
  bool saw_objective = false, saw_constraints = false, saw_binary = false;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto c = line.find('\\'); c != std::string_view::npos) line = line.substr(0, c);
    // Section keywords occupy a line of their own.
    std::string key = lower(line);
    key.erase(0, key.find_first_not_of(" \t\r"));
    key.erase(key.find_last_not_of(" \t\r") + 1);
    if (key == "minimize" || key == "minimise" || key == "min") {
      if (section != Section::kNone) lp_fail(lineno, "objective section out of order");
      section = Section::kObjective;
      saw_objective = true;
      continue;
    }
    if (key == "maximize" || key == "maximise" || key == "max") lp_fail(lineno, "only minimization is supported");
    if (key == "subject to" || key == "such that" || key == "st" || key == "s.t.") {
      if (section != Section::kObjective) lp_fail(lineno, "constraint section out of order");
      section = Section::kConstraints;
      saw_constraints = true;
      continue;
    }
    if (key == "binary" || key == "binaries" || key == "bin") {
      if (section != Section::kConstraints) lp_fail(lineno, "binary section out of order");
      section = Section::kBinary;
      saw_binary = true;
      continue;
    }
    if (key == "bounds" || key == "general" || key == "generals") lp_fail(lineno, "unsupported section '" + key + "'");
    if (key == "end") {
      section = Section::kEnd;
      continue;
    }
    if (key.empty()) continue;
    switch (section) {
      case Section::kNone: lp_fail(lineno, "content before the objective section");
      case Section::kEnd: lp_fail(lineno, "content after End");
      case Section::kObjective: tokenize_line(line, lineno, obj_tokens); break;
      case Section::kConstraints: tokenize_line(line, lineno, con_tokens); break;
      case Section::kBinary: {
        std::vector<Token> tk;
        tokenize_line(line, lineno, tk);
        for (const auto& t : tk) {
          if (t.kind != Token::kIdent) lp_fail(lineno, "expected variable names in the binary section");
          binaries.emplace_back(t.text, lineno);
        }
        break;
      }
    }
  }
  if (!saw_objective || !saw_constraints || !saw_binary) throw InputError("lp: missing section");
  if (section != Section::kEnd) throw InputError("lp: missing End");

  IlpModel m;
  std::unordered_map<std::string, int> index;
  for (const auto& [name, line] : binaries) {
    if (!index.emplace(name, static_cast<int>(m.variables.size())).second) lp_fail(line, "duplicate binary '" + name + "'");
    m.variables.push_back(name);
  }
  auto resolve = [&](const RawRow& row) {
    std::vector<LinearTerm> out;
    for (const auto& [name, coef] : row.terms) {
      auto it = index.find(name);
      if (it == index.end()) lp_fail(row.line, "variable '" + name + "' is not declared binary");
      out.push_back({it->second, coef});
    }
    return normalized(std::move(out));
  };

  {
    RawRow obj;
    std::size_t i = 0;
    obj.line = obj_tokens.empty() ? 0 : obj_tokens[0].line;
    if (obj_tokens.size() >= 2 && obj_tokens[0].kind == Token::kIdent && obj_tokens[1].kind == Token::kColon) i = 2;
    i = parse_expr(obj_tokens, i, obj, true);
    if (i != obj_tokens.size()) lp_fail(obj_tokens[i].line, "unexpected token in the objective");
    m.objective = resolve(obj);
    m.objective_constant = obj.constant;
  }

  std::set<std::string> row_names;
  std::size_t i = 0;
  while (i < con_tokens.size()) {
    RawRow row;
    row.line = con_tokens[i].line;
    if (i + 1 < con_tokens.size() && con_tokens[i].kind == Token::kIdent && con_tokens[i + 1].kind == Token::kColon) {
      row.name = con_tokens[i].text;
      i += 2;
    } else {
      row.name = "c" + std::to_string(m.constraints.size() + 1);
    }
    if (!row_names.insert(row.name).second) lp_fail(row.line, "duplicate constraint name '" + row.name + "'");
    i = parse_expr(con_tokens, i, row, false);
    if (row.terms.empty()) lp_fail(row.line, "constraint without terms");
    if (i >= con_tokens.size()) lp_fail(row.line, "missing comparison operator");
    switch (con_tokens[i].kind) {
      case Token::kLe: row.sense = Sense::kLe; break;
      case Token::kGe: row.sense = Sense::kGe; break;
      case Token::kEq: row.sense = Sense::kEq; break;
      default: lp_fail(con_tokens[i].line, "expected <=, >= or =");
    }
    ++i;
    int sign = 1;
    while (i < con_tokens.size() && (con_tokens[i].kind == Token::kPlus || con_tokens[i].kind == Token::kMinus)) {
      if (con_tokens[i].kind == Token::kMinus) sign = -sign;
      ++i;
    }
    if (i >= con_tokens.size() || con_tokens[i].kind != Token::kNumber) lp_fail(row.line, "expected a right-hand side");
    row.rhs = sign * static_cast<int>(con_tokens[i].value);
    ++i;
    Constraint c;
    c.name = row.name;
    c.terms = resolve(row);
    c.sense = row.sense;
    c.rhs = row.rhs;
    m.constraints.push_back(std::move(c));
  }
  return m;
}

namespace {

enum : char { kUnset = -1 };

class Search {
 public:
  explicit Search(const IlpModel& m) : m_(m), n_(static_cast<int>(m.variables.size())) {
    occurs_.resize(n_);
    const auto rows = m.constraints.size();
    act_.assign(rows, 0);
    min_rest_.assign(rows, 0);
    max_rest_.assign(rows, 0);
    for (std::size_t r = 0; r < rows; ++r)
      for (const auto& t : m.constraints[r].terms) {
        if (t.var < 0 || t.var >= n_) throw InputError("ilp: term refers to an unknown variable");
        occurs_[t.var].emplace_back(static_cast<int>(r), t.coef);
        (t.coef < 0 ? min_rest_[r] : max_rest_[r]) += t.coef;
      }
    obj_coef_.assign(n_, 0);
    for (const auto& t : m.objective) obj_coef_[t.var] += t.coef;
    for (int v = 0; v < n_; ++v)
      if (obj_coef_[v] < 0) obj_min_rest_ += obj_coef_[v];
    values_.assign(n_, kUnset);
  }

  /// Fixes variables pinned by single-variable rows; false if contradictory.
  bool fix_singletons() {
    std::vector<char> allowed(n_, 3);  // bit 0: value 0 allowed, bit 1: value 1
    for (const auto& c : m_.constraints) {
      if (c.terms.size() != 1) continue;
      const auto t = c.terms.front();
      char ok = 0;
      for (int x = 0; x <= 1; ++x) {
        const int lhs = t.coef * x;
        const bool sat = c.sense == Sense::kLe ? lhs <= c.rhs : c.sense == Sense::kGe ? lhs >= c.rhs : lhs == c.rhs;
        if (sat) ok |= static_cast<char>(1 << x);
      }
      allowed[t.var] &= ok;
    }
    for (int v = 0; v < n_; ++v) {
      if (allowed[v] == 0) return false;
      if (allowed[v] != 3) {
        if (!assign(v, allowed[v] == 1 ? 0 : 1)) return false;
      } else {
        free_.push_back(v);
      }
    }
    return true;
  }

  std::size_t free_count() const { return free_.size(); }

  void optimize() {
    best_ = std::numeric_limits<int>::max();
    dfs_opt(0);
  }

  void enumerate(const std::function<void(const std::vector<char>&)>& f) { dfs_all(0, f); }

  int best() const { return best_; }
  const std::vector<char>& best_values() const { return best_values_; }

 private:
  bool row_ok(int r) const {
    const auto& c = m_.constraints[r];
    const int lo = act_[r] + min_rest_[r], hi = act_[r] + max_rest_[r];
    switch (c.sense) {
      case Sense::kLe: return lo <= c.rhs;
      case Sense::kGe: return hi >= c.rhs;
      case Sense::kEq: return lo <= c.rhs && c.rhs <= hi;
    }
    return false;
  }

  bool assign(int v, int x) {
    values_[v] = static_cast<char>(x);
    bool ok = true;
    for (auto [r, coef] : occurs_[v]) {
      (coef < 0 ? min_rest_[r] : max_rest_[r]) -= coef;
      act_[r] += coef * x;
      if (!row_ok(r)) ok = false;
    }
    obj_act_ += obj_coef_[v] * x;
    if (obj_coef_[v] < 0) obj_min_rest_ -= obj_coef_[v];
    return ok;
  }

  void unassign(int v) {
    const int x = values_[v];
    for (auto [r, coef] : occurs_[v]) {
      (coef < 0 ? min_rest_[r] : max_rest_[r]) += coef;
      act_[r] -= coef * x;
    }
    obj_act_ -= obj_coef_[v] * x;
    if (obj_coef_[v] < 0) obj_min_rest_ += obj_coef_[v];
    values_[v] = kUnset;
  }

  void dfs_opt(std::size_t depth) {
    if (obj_act_ + obj_min_rest_ + m_.objective_constant >= best_) return;
    if (depth == free_.size()) {
      best_ = obj_act_ + m_.objective_constant;
      best_values_ = values_;
      return;
    }
    const int v = free_[depth];
    const int first = obj_coef_[v] < 0 ? 1 : 0;
    for (int x : {first, 1 - first}) {
      if (assign(v, x)) dfs_opt(depth + 1);
      unassign(v);
    }
  }

  void dfs_all(std::size_t depth, const std::function<void(const std::vector<char>&)>& f) {
    if (depth == free_.size()) {
      f(values_);
      return;
    }
    const int v = free_[depth];
    for (int x : {0, 1}) {
      if (assign(v, x)) dfs_all(depth + 1, f);
      unassign(v);
    }
  }

  const IlpModel& m_;
  int n_;
  std::vector<std::vector<std::pair<int, int>>> occurs_;
  std::vector<int> act_, min_rest_, max_rest_;
  std::vector<int> obj_coef_;
  int obj_act_ = 0, obj_min_rest_ = 0;
  std::vector<char> values_;
  std::vector<int> free_;
  int best_ = std::numeric_limits<int>::max();
  std::vector<char> best_values_;
};

void check_cap(const Search& s) {
  if (s.free_count() > static_cast<std::size_t>(kExhaustiveMaxFreeVariables))
    throw InputError("ilp: " + std::to_string(s.free_count()) + " free variables exceed the exhaustive cap of " +
                     std::to_string(kExhaustiveMaxFreeVariables));
}

}  // namespace

std::optional<IlpSolution> solve_exhaustive(const IlpModel& m) {
  Search s(m);
  if (!s.fix_singletons()) return std::nullopt;
  check_cap(s);
  s.optimize();
  if (s.best() == std::numeric_limits<int>::max()) return std::nullopt;
  return IlpSolution{s.best(), s.best_values()};
}

void for_each_feasible(const IlpModel& m, const std::function<void(const std::vector<char>&)>& f) {
  Search s(m);
  if (!s.fix_singletons()) return;
  check_cap(s);
  s.enumerate(f);
}

int evaluate(const IlpModel& m, const std::vector<char>& values) {
  int v = m.objective_constant;
  for (const auto& t : m.objective) v += t.coef * values.at(t.var);
  return v;
}

bool is_feasible(const IlpModel& m, const std::vector<char>& values) {
  if (values.size() != m.variables.size()) return false;
  for (char x : values)
    if (x != 0 && x != 1) return false;
  for (const auto& c : m.constraints) {
    int lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * values[t.var];
    const bool sat = c.sense == Sense::kLe ? lhs <= c.rhs : c.sense == Sense::kGe ? lhs >= c.rhs : lhs == c.rhs;
    if (!sat) return false;
  }
  return true;
}

ColoredDigraph decode_graph(const IlpModel& m, const ColoredDigraph& original, const std::vector<char>& values) {
  if (m.arc_of.size() != m.variables.size()) throw InputError("ilp: model carries no variable metadata");
  std::vector<Vertex> vs;
  for (int v = 0; v < original.size(); ++v) vs.push_back({original.id(v), original.color(v)});
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] && m.arc_of[i].first >= 0) arcs.push_back(m.arc_of[i]);
  return ColoredDigraph(std::move(vs), std::span<const std::pair<int, int>>(arcs));
}

TripleSet decode_triples(const IlpModel& m, const std::vector<char>& values) {
  if (m.triple_of.size() != m.variables.size()) throw InputError("ilp: model carries no variable metadata");
  std::vector<Triple> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] && m.triple_of[i].a >= 0) out.push_back(m.triple_of[i]);
  return TripleSet(m.vertex_ids, std::move(out));
}

}  // namespace bmg
