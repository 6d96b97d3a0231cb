#include "gkit/dsl.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <vector>

#include "gkit/ginzburg.hpp"

namespace gkit {

namespace {

constexpr std::array<std::pair<Command, const char*>, 10> kCommands{{
    {Command::Check, "check"},
    {Command::Build, "build"},
    {Command::Homology, "homology"},
    {Command::Jacobi, "jacobi"},
    {Command::Hochschild, "hochschild"},
    {Command::XComplex, "xcomplex"},
    {Command::Koszul, "koszul"},
    {Command::Cyclic, "cyclic"},
    {Command::Normalize, "normalize"},
    {Command::Extract, "extract"},
}};

struct Line {
  int number = 0;
  std::string text;
};

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Cursor over one line; columns are reported 1-based.
struct Cursor {
  const Line& line;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw SpecError(kind, line.number, static_cast<int>(pos) + 1, msg);
  }
  void skip_ws() {
    while (pos < line.text.size() && std::isspace(static_cast<unsigned char>(line.text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= line.text.size();
  }
  char peek() {
    skip_ws();
    return pos < line.text.size() ? line.text[pos] : '\0';
  }
  std::string name() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < line.text.size() && name_char(line.text[pos])) ++pos;
    while (pos < line.text.size() && line.text[pos] == '\'') ++pos;
    if (start == pos) fail("expected a name");
    return line.text.substr(start, pos - start);
  }
  long integer() {
    skip_ws();
    const std::size_t start = pos;
    if (pos < line.text.size() && (line.text[pos] == '-' || line.text[pos] == '+')) ++pos;
    while (pos < line.text.size() && std::isdigit(static_cast<unsigned char>(line.text[pos]))) ++pos;
    const std::string s = line.text.substr(start, pos - start);
    if (s.empty() || s == "-" || s == "+") {
      pos = start;
      fail("expected an integer");
    }
    try {
      return std::stol(s);
    } catch (const std::out_of_range&) {
      pos = start;
      fail("integer out of range");
    }
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }
};

Rational read_rational(Cursor& cur) {
  cur.skip_ws();
  const std::size_t start = cur.pos;
  const std::string& t = cur.line.text;
  while (cur.pos < t.size() && std::isdigit(static_cast<unsigned char>(t[cur.pos]))) ++cur.pos;
  if (cur.pos < t.size() && t[cur.pos] == '/') {
    ++cur.pos;
    const std::size_t den = cur.pos;
    while (cur.pos < t.size() && std::isdigit(static_cast<unsigned char>(t[cur.pos]))) ++cur.pos;
    if (den == cur.pos) cur.fail("expected a denominator");
  }
  Rational r(t.substr(start, cur.pos - start));
  if (r.get_den() == 0) {
    cur.pos = start;
    cur.fail("zero denominator");
  }
  r.canonicalize();
  return r;
}

struct ParsedTerm {
  Rational coeff;
  Path path;
  std::size_t column = 0;
};

/// sum of [sign] [rational] [*] chain, where chain = name*name*... or an idempotent.
std::vector<ParsedTerm> parse_expression(Cursor& cur, const GradedQuiver& q) {
  std::vector<ParsedTerm> out;
  if (cur.peek() == '0') {
    const std::size_t save = cur.pos;
    ++cur.pos;
    if (cur.at_end()) return out;
    cur.pos = save;
  }
  bool first = true;
  while (true) {
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++cur.pos;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    ParsedTerm t;
    t.column = cur.pos;
    t.coeff = sign;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      t.coeff *= read_rational(cur);
      if (cur.peek() == '*') ++cur.pos;
    }
    cur.skip_ws();
    const std::size_t chain_col = cur.pos;
    std::string chain = cur.name();
    while (cur.pos < cur.line.text.size() && cur.line.text[cur.pos] == '*') {
      ++cur.pos;
      chain += "*" + cur.name();
    }
    try {
      t.path = Path::parse(q, chain);
    } catch (const Error& e) {
      cur.pos = chain_col;
      cur.fail(e.detail(), e.kind() == ErrorKind::UnknownArrow ? ErrorKind::UnknownArrow : ErrorKind::SyntaxError);
    }
    out.push_back(std::move(t));
    if (cur.at_end()) break;
  }
  return out;
}

std::string strip_comment(const std::string& s) {
  const auto hash = s.find('#');
  return hash == std::string::npos ? s : s.substr(0, hash);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string format_expression(const GradedQuiver& q, const TermMap& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms) {
    Rational a = c;
    if (s.empty()) {
      if (a < 0) s += "-";
    } else {
      s += a < 0 ? " - " : " + ";
    }
    if (a < 0) a = -a;
    if (a != 1) s += to_string(a) + " ";
    s += path_to_string(q, p);
  }
  return s;
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

Command command_from_string(const std::string& s) {
  for (const auto& [k, n] : kCommands)
    if (s == n) return k;
  throw Error(ErrorKind::SyntaxError, "unknown command '" + s + "'");
}

bool JobSpec::operator==(const JobSpec& o) const {
  return *quiver == *o.quiver && d == o.d && potential == o.potential && truncation == o.truncation &&
         command == o.command && window == o.window && arity_max == o.arity_max && overrides == o.overrides;
}

JobSpec parse_spec(const std::string& text) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
      ++n;
      if (!trim(strip_comment(raw)).empty()) lines.push_back({n, strip_comment(raw)});
    }
  }

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::optional<Line> w_line;
  std::vector<std::pair<Line, std::size_t>> override_lines;
  std::optional<std::size_t> w_pos;
  JobSpec s;
  bool saw_d = false, saw_vertices = false;

  for (const Line& line : lines) {
    Cursor cur{line};
    cur.skip_ws();
    const std::size_t key_col = cur.pos;
    const std::string key = cur.name();
    if (key == "vertices" || key == "arrows") {
      cur.expect(':');
      if (key == "vertices") {
        saw_vertices = true;
        while (!cur.at_end()) {
          const std::size_t col = cur.pos;
          std::string v = cur.name();
          for (const auto& u : vertices)
            if (u == v) {
              cur.pos = col;
              cur.fail("duplicate vertex '" + v + "'");
            }
          vertices.push_back(v);
          if (cur.peek() == ',') ++cur.pos;
        }
        if (vertices.empty()) cur.fail("expected at least one vertex");
        continue;
      }
      while (!cur.at_end()) {
        Arrow a;
        const std::size_t col = cur.pos;
        a.name = cur.name();
        if (a.name.back() == '\'') {
          cur.pos = col;
          cur.fail("declared arrow names may not end in a prime");
        }
        for (const auto& b : arrows)
          if (b.name == a.name) {
            cur.pos = col;
            cur.fail("duplicate arrow '" + a.name + "'");
          }
        std::array<std::string, 2> ends;
        for (auto& e : ends) {
          const std::size_t ecol = cur.pos;
          e = cur.name();
          int idx = -1;
          for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == e) idx = static_cast<int>(i);
          if (idx < 0) {
            cur.pos = ecol;
            cur.skip_ws();
            cur.fail("unknown vertex '" + e + "'");
          }
          (&e == &ends[0] ? a.src : a.tgt) = idx;
        }
        a.degree = static_cast<int>(cur.integer());
        arrows.push_back(a);
        if (cur.peek() == ',') ++cur.pos;
      }
      continue;
    }
    if (key == "d" && cur.peek() != '=') {
      const std::size_t gcol = cur.pos;
      cur.name();
      cur.expect('=');
      override_lines.emplace_back(line, gcol);
      continue;
    }
    if (key != "d" && key != "truncate" && key != "run" && key != "window" && key != "arity_max" && key != "w") {
      cur.pos = key_col;
      cur.fail("unknown key '" + key + "'");
    }
    cur.expect('=');
    if (key == "d") {
      s.d = static_cast<int>(cur.integer());
      saw_d = true;
      cur.expect_end();
    } else if (key == "truncate") {
      const long n = cur.integer();
      if (n < 1) cur.fail("truncation must be at least 1");
      s.truncation = static_cast<int>(n);
      cur.expect_end();
    } else if (key == "run") {
      const std::size_t col = cur.pos;
      const std::string c = cur.name();
      try {
        s.command = command_from_string(c);
      } catch (const Error& e) {
        cur.pos = col;
        cur.skip_ws();
        cur.fail(e.detail());
      }
      cur.expect_end();
    } else if (key == "window") {
      const long lo = cur.integer();
      cur.expect(':');
      const long hi = cur.integer();
      if (lo > hi) cur.fail("window is empty");
      s.window = std::make_pair(static_cast<int>(lo), static_cast<int>(hi));
      cur.expect_end();
    } else if (key == "arity_max") {
      const long k = cur.integer();
      if (k < 2) cur.fail("arity_max must be at least 2");
      s.arity_max = static_cast<int>(k);
      cur.expect_end();
    } else if (key == "w") {
      if (w_line) cur.fail("potential given twice");
      w_line = line;
      w_pos = cur.pos;
    }
  }
  if (!saw_vertices) throw SpecError(ErrorKind::SyntaxError, lines.empty() ? 1 : lines.front().number, 1, "missing 'vertices:'");
  if (!saw_d) throw SpecError(ErrorKind::SyntaxError, lines.empty() ? 1 : lines.back().number, 1, "missing 'd = ...'");

  try {
    s.quiver = make_quiver(vertices, arrows, s.d);
    QuiverPtr g = ginzburg_quiver(*s.quiver, s.d);
    s.potential = CyclicElement(g, s.truncation);
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(e.kind(), lines.front().number, 1, e.detail());
  }
  const GradedQuiver& g = *s.potential.quiver();

  if (w_line) {
    Cursor cur{*w_line, *w_pos};
    for (const ParsedTerm& t : parse_expression(cur, g)) {
      if (!t.path.is_cycle()) {
        cur.pos = t.column;
        cur.skip_ws();
        cur.fail("term '" + path_to_string(g, t.path) + "' is not a closed path", ErrorKind::NonCyclicTerm);
      }
      if (t.path.length() > s.truncation) {
        cur.pos = t.column;
        cur.skip_ws();
        cur.fail("term is longer than the truncation");
      }
      s.potential.add_cycle(t.path, t.coeff);
    }
  }
  for (const auto& [line, gcol] : override_lines) {
    Cursor cur{line, gcol};
    const std::string gen = cur.name();
    const int a = g.arrow_index(gen);
    if (a < 0) {
      cur.pos = gcol;
      cur.skip_ws();
      cur.fail("unknown generator '" + gen + "'", ErrorKind::UnknownArrow);
    }
    if (s.overrides.count(gen)) cur.fail("differential of '" + gen + "' given twice");
    cur.expect('=');
    FreeElement f(s.potential.quiver(), s.truncation);
    const Arrow& arr = g.arrow(a);
    for (const ParsedTerm& t : parse_expression(cur, g)) {
      if (t.path.src != arr.src || t.path.tgt != arr.tgt) {
        cur.pos = t.column;
        cur.skip_ws();
        cur.fail("term '" + path_to_string(g, t.path) + "' does not run parallel to " + gen);
      }
      f.add_term(t.path, t.coeff);
    }
    if (!f.is_zero() && f.degree() != arr.degree + 1) {
      cur.pos = gcol;
      cur.fail("d " + gen + " must have degree " + std::to_string(arr.degree + 1), ErrorKind::DegreeMismatch);
    }
    s.overrides.emplace(gen, std::move(f));
  }
  return s;
}

std::string print_spec(const JobSpec& s) {
  const GradedQuiver& q = *s.quiver;
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : q.vertices()) os << " " << v;
  os << "\n";
  for (const Arrow& a : q.arrows())
    os << "arrows: " << a.name << " " << q.vertices()[static_cast<std::size_t>(a.src)] << " "
       << q.vertices()[static_cast<std::size_t>(a.tgt)] << " " << a.degree << "\n";
  os << "d = " << s.d << "\n";
  os << "w = " << format_expression(*s.potential.quiver(), s.potential.terms()) << "\n";
  for (const auto& [gen, f] : s.overrides) os << "d " << gen << " = " << format_expression(f.q(), f.terms()) << "\n";
  os << "truncate = " << s.truncation << "\n";
  if (s.window) os << "window = " << s.window->first << ":" << s.window->second << "\n";
  if (s.arity_max) os << "arity_max = " << *s.arity_max << "\n";
  os << "run = " << to_string(s.command) << "\n";
  return os.str();
}

}  // namespace gkit
