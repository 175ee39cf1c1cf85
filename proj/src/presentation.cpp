#include "pmod/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace pmod {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::size_t skip_space(std::string_view s, std::size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

// A substring of a source line remembering where it starts (0-based column).
struct Span {
  std::string_view text;
  std::size_t column;

  Span trimmed() const {
    std::size_t b = skip_space(text, 0);
    std::size_t e = text.size();
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return {text.substr(b, e - b), column + b};
  }
  Span sub(std::size_t pos, std::size_t len = std::string_view::npos) const {
    return {text.substr(pos, len), column + pos};
  }
};

class LineParser {
 public:
  explicit LineParser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(std::size_t column, const std::string& message) const {
    throw SyntaxError(line_, column + 1, message);
  }

  Grade grade(Span s, std::size_t n) const {
    s = s.trimmed();
    Grade g;
    try {
      g = Grade::parse(s.text);
    } catch (const Error& e) {
      fail(s.column, std::string("malformed grade: ") + e.what());
    }
    if (g.dim() != n) fail(s.column, "grade has " + std::to_string(g.dim()) + " coordinates, expected " + std::to_string(n));
    return g;
  }

  std::string identifier(Span s) const {
    s = s.trimmed();
    if (!is_identifier(s.text)) fail(s.column, "expected an identifier, found '" + std::string(s.text) + "'");
    return std::string(s.text);
  }

  Vector terms(Span s, const FieldSpec& field, const GradedSet& gens) const {
    Vector coeffs = zero_vector(field, gens.size());
    s = s.trimmed();
    if (s.text.empty()) fail(s.column, "missing relation terms");
    std::size_t pos = 0;
    bool first = true;
    while (true) {
      pos = skip_space(s.text, pos);
      if (pos >= s.text.size()) {
        if (first) fail(s.column + pos, "missing relation terms");
        break;
      }
      bool negative = false;
      if (s.text[pos] == '+' || s.text[pos] == '-') {
        negative = s.text[pos] == '-';
        ++pos;
      } else if (!first) {
        fail(s.column + pos, "expected '+' or '-' between terms");
      }
      std::size_t end = s.text.find_first_of("+-", pos);
      Span body = s.sub(pos, end == std::string_view::npos ? std::string_view::npos : end - pos).trimmed();
      if (body.text.empty()) fail(body.column, "empty term");
      pos = end == std::string_view::npos ? s.text.size() : end;
      first = false;

      auto star = body.text.find('*');
      Scalar c = Scalar::one(field);
      std::string_view name_text = body.text;
      if (star != std::string_view::npos) {
        Span lit = body.sub(0, star).trimmed();
        try {
          c = Scalar::parse(field, lit.text);
        } catch (const Error& e) {
          fail(lit.column, e.what());
        }
        name_text = body.text.substr(star + 1);
        Span name = body.sub(star + 1).trimmed();
        name_text = name.text;
        if (!is_identifier(name_text)) fail(name.column, "expected a generator name");
      } else if (!is_identifier(body.text)) {
        // A bare literal is only meaningful as the zero relation.
        try {
          if (Scalar::parse(field, body.text).is_zero()) continue;
        } catch (const Error&) {
        }
        fail(body.column, "expected 'coeff*name', 'name' or '0'");
      }
      auto index = gens.index_of(std::string(name_text));
      if (!index) fail(body.column, "unknown generator '" + std::string(name_text) + "'");
      coeffs[*index] += negative ? -c : c;
    }
    return coeffs;
  }

 private:
  std::size_t line_;
};

std::string serialize_terms(const Vector& coeffs, const GradedSet& gens, bool rational) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    std::string lit = coeffs[i].to_string();
    if (out.empty()) {
      out = lit;
    } else if (rational && lit.front() == '-') {
      out += " - " + lit.substr(1);
    } else {
      out += " + " + lit;
    }
    out += "*" + gens[i].name;
  }
  return out.empty() ? "0" : out;
}

std::string exponent_text(const Rational& e) {
  if (e == 1) return "";
  if (e.get_den() == 1) return "^" + to_string(e);
  return "^(" + to_string(e) + ")";
}

}  // namespace

Presentation::Presentation(std::string name, FieldSpec field, std::size_t n, GradedSet generators,
                           std::vector<Relation> relations)
    : name_(std::move(name)), field_(field), n_(n), generators_(std::move(generators)), relations_(std::move(relations)) {
  if (generators_.params() != n_ && !(generators_.empty() && generators_.params() == 0)) {
    throw Error(ErrorKind::DimensionMismatch, "generator grades do not have " + std::to_string(n_) + " coordinates");
  }
  if (generators_.empty()) generators_ = GradedSet(n_, {});
  std::set<std::string> names;
  for (const auto& g : generators_.generators()) names.insert(g.name);
  for (const auto& r : relations_) {
    if (!names.insert(r.name).second) throw Error(ErrorKind::InvalidArgument, "duplicate name '" + r.name + "'");
    if (!(r.element.field == field_)) throw Error(ErrorKind::FieldMismatch, "relation '" + r.name + "' field");
    if (r.element.grade.dim() != n_) throw Error(ErrorKind::DimensionMismatch, "relation '" + r.name + "' grade");
    if (!respects_pattern(generators_, r.element)) {
      throw Error(ErrorKind::PatternViolation, "relation '" + r.name + "' uses a generator above its grade");
    }
  }
}

Presentation Presentation::zero(const FieldSpec& field, std::size_t n, std::string name) {
  return Presentation(std::move(name), field, n, GradedSet(n, {}), {});
}

std::vector<HomogeneousElement> Presentation::relation_elements() const {
  std::vector<HomogeneousElement> out;
  out.reserve(relations_.size());
  for (const auto& r : relations_) out.push_back(r.element);
  return out;
}

Presentation Presentation::renamed(std::string name) const {
  Presentation out = *this;
  out.name_ = std::move(name);
  return out;
}

Presentation parse_presentation(std::string_view text) {
  std::string name = "M";
  std::optional<FieldSpec> field;
  std::optional<std::size_t> n;
  GradedSet gens;
  std::vector<Relation> rels;
  std::set<std::string> names;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Span line{raw, 0};
    Span body = line.trimmed();
    if (body.text.empty()) continue;

    LineParser lp(line_no);
    std::size_t kw_end = body.text.find_first_of(" \t");
    std::string_view keyword = body.text.substr(0, kw_end);
    Span rest = kw_end == std::string_view::npos ? Span{"", body.column + body.text.size()} : body.sub(kw_end);

    auto claim_name = [&](const std::string& id, std::size_t column) {
      if (!names.insert(id).second) lp.fail(column, "duplicate name '" + id + "'");
    };

    if (keyword == "module") {
      name = lp.identifier(rest);
    } else if (keyword == "field") {
      Span f = rest.trimmed();
      try {
        field = FieldSpec::parse(f.text);
      } catch (const Error& e) {
        lp.fail(f.column, e.what());
      }
    } else if (keyword == "params") {
      Span v = rest.trimmed();
      if (v.text.empty() || !std::all_of(v.text.begin(), v.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        lp.fail(v.column, "params expects a positive integer");
      }
      n = std::stoul(std::string(v.text));
      if (*n == 0) lp.fail(v.column, "params must be positive");
      gens = GradedSet(*n, {});
    } else if (keyword == "gen" || keyword == "rel") {
      if (!field || !n) lp.fail(body.column, "'field' and 'params' must precede generators and relations");
      auto at = rest.text.find('@');
      if (at == std::string_view::npos) lp.fail(rest.column, "expected '@'");
      Span id_span = rest.sub(0, at).trimmed();
      std::string id = lp.identifier(id_span);
      if (keyword == "gen") {
        if (!rels.empty()) lp.fail(body.column, "generators must be declared before relations");
        claim_name(id, id_span.column);
        gens.push_back({id, lp.grade(rest.sub(at + 1), *n)});
      } else {
        Span after = rest.sub(at + 1);
        auto eq = after.text.find('=');
        if (eq == std::string_view::npos) lp.fail(after.column, "expected '='");
        Grade u = lp.grade(after.sub(0, eq), *n);
        Vector coeffs = lp.terms(after.sub(eq + 1), *field, gens);
        claim_name(id, id_span.column);
        rels.push_back({id, make_element(*field, gens, u, std::move(coeffs))});
      }
    } else {
      lp.fail(body.column, "unknown directive '" + std::string(keyword) + "'");
    }
  }
  if (!field) throw SyntaxError(line_no, 1, "missing 'field' line");
  if (!n) throw SyntaxError(line_no, 1, "missing 'params' line");
  return Presentation(name, *field, *n, std::move(gens), std::move(rels));
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

std::string serialize(const Presentation& p) {
  bool bare = p.params() == 1;
  std::string out = "module " + p.name() + "\nfield " + p.field().to_string() + "\nparams " +
                    std::to_string(p.params()) + "\n";
  for (const auto& g : p.generators().generators()) out += "gen " + g.name + " @ " + g.grade.to_string(bare) + "\n";
  for (const auto& r : p.relations()) {
    out += "rel " + r.name + " @ " + r.element.grade.to_string(bare) + " = " +
           serialize_terms(r.element.coeffs, p.generators(), p.field().is_rational()) + "\n";
  }
  return out;
}

Matrix relation_matrix(const Presentation& p) {
  Matrix t(p.field(), p.generators().size(), p.relations().size());
  for (std::size_t c = 0; c < p.relations().size(); ++c) {
    for (std::size_t r = 0; r < p.generators().size(); ++r) t(r, c) = p.relations()[c].element.coeffs[r];
  }
  return t;
}

Presentation minimize(const Presentation& p) {
  GradedSet gens = p.generators();
  std::vector<Relation> rels = p.relations();

  // Unit-pivot elimination: each round removes one generator and one relation.
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t ri = 0; ri < rels.size() && !progress; ++ri) {
      const HomogeneousElement& r = rels[ri].element;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        if (r.coeffs[g].is_zero() || !(gens.grade(g) == r.grade)) continue;
        Scalar pivot_inv = r.coeffs[g].inverse();
        Relation pivot = rels[ri];
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(ri));
        for (auto& s : rels) {
          Scalar d = s.element.coeffs[g];
          if (d.is_zero()) continue;
          Scalar factor = d * pivot_inv;
          for (std::size_t k = 0; k < gens.size(); ++k) s.element.coeffs[k] -= factor * pivot.element.coeffs[k];
        }
        for (auto& s : rels) s.element.coeffs.erase(s.element.coeffs.begin() + static_cast<std::ptrdiff_t>(g));
        gens = gens.without(g);
        progress = true;
        break;
      }
    }
  }

  std::stable_sort(rels.begin(), rels.end(),
                   [](const Relation& a, const Relation& b) { return lex_less(a.element.grade, b.element.grade); });

  // Drop redundant relations, scanning from the top grade down so that the
  // earliest copy of a duplicate survives.
  for (std::size_t i = rels.size(); i-- > 0;) {
    std::vector<HomogeneousElement> others;
    for (std::size_t j = 0; j < rels.size(); ++j) {
      if (j != i) others.push_back(rels[j].element);
    }
    if (span_membership(rels[i].element, others).member) rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(i));
  }
  return Presentation(p.name(), p.field(), p.params(), std::move(gens), std::move(rels));
}

CriticalGrades critical_grades(const Presentation& p) {
  Presentation m = minimize(p);
  std::vector<std::set<Rational>> sets(p.params());
  auto collect = [&](const Grade& g) {
    for (std::size_t i = 0; i < g.dim(); ++i) sets[i].insert(g[i]);
  };
  for (const auto& g : m.generators().generators()) collect(g.grade);
  for (const auto& r : m.relations()) collect(r.element.grade);
  CriticalGrades out;
  for (auto& s : sets) out.axes.emplace_back(s.begin(), s.end());
  return out;
}

Presentation shift_presentation(const Presentation& p, const Epsilon& e, ShiftDirection direction) {
  Rational delta = direction == ShiftDirection::Forward ? Rational(-e.value()) : e.value();
  std::vector<Relation> rels = p.relations();
  for (auto& r : rels) r.element.grade = grade_offset(r.element.grade, delta);
  return Presentation(p.name(), p.field(), p.params(), p.generators().offset(delta), std::move(rels));
}

Presentation box_interval(const FieldSpec& field, const Grade& lower, const std::vector<Grade>& uppers) {
  GradedSet gens(lower.dim(), {{"a", lower}});
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < uppers.size(); ++i) {
    if (!grade_leq(lower, uppers[i])) {
      throw Error(ErrorKind::GradeOrderViolation, uppers[i].to_string() + " is not above " + lower.to_string());
    }
    rels.push_back({"r" + std::to_string(i + 1), make_element(field, gens, uppers[i], {Scalar::one(field)})});
  }
  return Presentation("C", field, lower.dim(), std::move(gens), std::move(rels));
}

std::string format_element(const HomogeneousElement& v, const GradedSet& basis) {
  if (v.coeffs.size() != basis.size()) throw Error(ErrorKind::BasisMismatch, "element is not over this basis");
  std::string out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (v.coeffs[i].is_zero()) continue;
    std::string coeff = v.coeffs[i].to_signed_string();
    bool negative = coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") out += coeff + " ";
    const Grade& g = basis.grade(i);
    for (std::size_t axis = 0; axis < g.dim(); ++axis) {
      Rational e = v.grade[axis] - g[axis];
      if (e == 0) continue;
      out += (g.dim() == 1 ? std::string("x") : "x" + std::to_string(axis + 1)) + exponent_text(e) + " ";
    }
    out += basis[i].name;
  }
  return out.empty() ? "0" : out;
}

HomogeneousElement parse_monomial_element(std::string_view text, const GradedSet& basis, const FieldSpec& field) {
  auto bad = [&](const std::string& why) -> Error {
    return Error(ErrorKind::InvalidArgument, "cannot read '" + std::string(text) + "': " + why);
  };
  Vector coeffs = zero_vector(field, basis.size());
  std::optional<Grade> grade;
  std::size_t pos = 0;
  bool first = true;
  while (true) {
    pos = skip_space(text, pos);
    if (pos >= text.size()) break;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    } else if (!first) {
      throw bad("expected '+' or '-'");
    }
    first = false;
    std::size_t end = pos;
    int depth = 0;
    while (end < text.size() && (depth > 0 || (text[end] != '+' && text[end] != '-'))) {
      if (text[end] == '(') ++depth;
      if (text[end] == ')') --depth;
      ++end;
    }
    std::istringstream tokens{std::string(text.substr(pos, end - pos))};
    pos = end;
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) throw bad("empty term");
    auto index = basis.index_of(words.back());
    if (!index) throw bad("unknown generator '" + words.back() + "'");
    Scalar c = Scalar::one(field);
    std::vector<Rational> exps(basis.params(), Rational(0));
    for (std::size_t k = 0; k + 1 < words.size(); ++k) {
      const std::string& w = words[k];
      if (std::isdigit(static_cast<unsigned char>(w[0]))) {
        c *= Scalar::from_rational(field, parse_rational(w));
        continue;
      }
      if (w[0] != 'x') throw bad("unexpected token '" + w + "'");
      auto caret = w.find('^');
      std::string var = w.substr(0, caret);
      std::size_t axis = 0;
      if (var.size() > 1) axis = std::stoul(var.substr(1)) - 1;
      if (axis >= basis.params()) throw bad("variable '" + var + "' out of range");
      Rational e(1);
      if (caret != std::string::npos) {
        std::string ex = w.substr(caret + 1);
        if (!ex.empty() && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
        e = parse_rational(ex);
      }
      exps[axis] += e;
    }
    std::vector<Rational> coords;
    for (std::size_t axis = 0; axis < basis.params(); ++axis) coords.push_back(basis.grade(*index)[axis] + exps[axis]);
    Grade term_grade(std::move(coords));
    if (grade && !(*grade == term_grade)) throw bad("terms live at different grades");
    grade = term_grade;
    coeffs[*index] += negative ? -c : c;
  }
  if (!grade) throw bad("no terms");
  return make_element(field, basis, *grade, std::move(coeffs));
}

}  // namespace pmod
