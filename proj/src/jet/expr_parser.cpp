#include <cctype>
#include <vector>

#include "chiralkit/errors.hpp"
#include "chiralkit/jet/expr.hpp"

namespace chiralkit::jet {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  DiffPoly parse() {
    DiffPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  DiffPoly expr() {
    DiffPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  DiffPoly term() {
    DiffPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        DiffPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc = (Scalar(1) / d.constant_term()) * acc;
      } else {
        return acc;
      }
    }
  }

  DiffPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    DiffPoly base = atom();
    if (accept('^')) {
      skip_ws();
      long e = integer();
      if (e < 0) fail("negative exponent");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  std::string word() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  DiffPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      DiffPoly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return DiffPoly(Scalar(exactlin::parse_rational(s_.substr(start, pos_ - start))));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");

    std::vector<std::string> ops;
    std::string w = word();
    while (pos_ < s_.size() && s_[pos_] == '.') {
      if (w != "dt" && w != "ds" && w != "dz" && w != "dzb") fail("unknown derivative '" + w + "'");
      ops.push_back(w);
      ++pos_;
      w = word();
    }
    DiffPoly base = base_name(w, !ops.empty());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) base = apply_op(*it, base);
    return base;
  }

  static DiffPoly apply_op(const std::string& op, const DiffPoly& p) {
    if (op == "dt") return total_derivative(Direction::Tau, p);
    if (op == "ds") return total_derivative(Direction::Sigma, p);
    Scalar half(Rational(1, 2));
    Scalar ihalf(0, op == "dz" ? Rational(-1, 2) : Rational(1, 2));
    return half * total_derivative(Direction::Tau, p) + ihalf * total_derivative(Direction::Sigma, p);
  }

  DiffPoly base_name(const std::string& w, bool derived) {
    if (w.empty()) fail("expected a name");
    auto index_of = [&](std::size_t from) {
      std::string digits = w.substr(from);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) fail("bad name '" + w + "'");
      int k = std::stoi(digits);
      if (k < 1) fail("field indices are 1-based");
      return k - 1;
    };
    if (w[0] == 'x') return DiffPoly(xvar(index_of(1)));
    if (w[0] == 'p' && w.size() > 1 && std::isdigit(static_cast<unsigned char>(w[1]))) return DiffPoly(pvar(index_of(1)));
    if (derived) fail("derivatives apply to x and p jets only");
    if (w == "i") return DiffPoly(Scalar::i());
    if (w == "e") {
      expect('(');
      long m = integer();
      expect(')');
      return DiffPoly(trig(static_cast<int>(m)));
    }
    if ((w[0] == 'f' || w[0] == 'g') && w.find_first_not_of('p', 1) == std::string::npos) {
      int k = static_cast<int>(w.size() - 1);
      return DiffPoly(w[0] == 'f' ? hol(k) : antihol(k));
    }
    fail("unknown name '" + w + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string out;
  auto append = [&](const std::string& f) {
    if (!out.empty()) out += "*";
    out += f;
  };
  for (const auto& s : m.symbols) append(symbol_name(s));
  for (const auto& [v, e] : m.jets) append(e == 1 ? jet_name(v) : jet_name(v) + "^" + std::to_string(e));
  return out;
}

}  // namespace

DiffPoly parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_text(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Scalar coeff = c;
    bool negative = false;
    if (sgn(coeff.re()) < 0 || (sgn(coeff.re()) == 0 && sgn(coeff.im()) < 0)) {
      negative = true;
      coeff = -coeff;
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = monomial_text(m);
    if (mono.empty())
      out += scalar_text(coeff);
    else if (coeff == Scalar(1))
      out += mono;
    else
      out += scalar_text(coeff) + "*" + mono;
  }
  return out;
}

Json to_json(const JetVar& v) {
  Json j;
  j["kind"] = v.kind == JetKind::Field ? "x" : "p";
  j["field"] = v.field + 1;
  j["dt"] = v.tau;
  j["ds"] = v.sigma;
  return j;
}

JetVar jet_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) throw ParseError("jet needs 'field'");
  JetVar v;
  std::string kind = j.value("kind", std::string("x"));
  if (kind != "x" && kind != "p") throw ParseError("jet kind must be 'x' or 'p'");
  v.kind = kind == "x" ? JetKind::Field : JetKind::Momentum;
  v.field = j.at("field").get<int>() - 1;
  v.tau = j.value("dt", 0);
  v.sigma = j.value("ds", 0);
  if (v.field < 0 || v.tau < 0 || v.sigma < 0) throw ParseError("bad jet indices");
  if (v.kind == JetKind::Momentum && v.tau != 0) throw ParseError("momentum jets carry no tau derivatives");
  return v;
}

Json to_json(const DiffPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["coeff"] = exactlin::to_json(c);
    Json syms = Json::array();
    for (const auto& s : m.symbols) syms.push_back(symbol_name(s));
    t["symbols"] = std::move(syms);
    Json jets = Json::array();
    for (const auto& [v, e] : m.jets) {
      Json jv = to_json(v);
      jv["pow"] = e;
      jets.push_back(std::move(jv));
    }
    t["jets"] = std::move(jets);
    terms.push_back(std::move(t));
  }
  Json j;
  j["op"] = "sum";
  j["terms"] = std::move(terms);
  return j;
}

DiffPoly diffpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array()) throw ParseError("expression needs 'terms'");
  DiffPoly out;
  for (const auto& t : j.at("terms")) {
    if (!t.contains("coeff")) throw ParseError("term needs 'coeff'");
    DiffPoly term(exactlin::scalar_from_json(t.at("coeff")));
    for (const auto& s : t.value("symbols", Json::array())) term = term * parse_expr(s.get<std::string>());
    for (const auto& jv : t.value("jets", Json::array())) {
      int e = jv.value("pow", 1);
      if (e < 1) throw ParseError("jet power must be positive");
      term = term * DiffPoly(Monomial::of(jet_from_json(jv), e));
    }
    out += term;
  }
  return out;
}

}  // namespace chiralkit::jet
