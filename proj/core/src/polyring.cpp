#include "hodgekit/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hodgekit {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

}  // namespace

WeightedRing::WeightedRing(std::vector<std::string> vars, std::vector<int> wts)
    : variables(std::move(vars)), weights(std::move(wts)) {
  if (variables.empty()) throw DomainError("ring needs at least one variable");
  if (variables.size() != weights.size())
    throw DomainError("variable and weight lists differ in length");
  for (int w : weights)
    if (w < 1) throw DomainError("weights must be positive integers");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_name(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
}

long WeightedRing::weight_sum() const {
  long s = 0;
  for (int w : weights) s += w;
  return s;
}

int WeightedRing::max_weight() const {
  return *std::max_element(weights.begin(), weights.end());
}

std::optional<int> WeightedRing::index_of(const std::string& name) const {
  for (int i = 0; i < arity(); ++i)
    if (variables[i] == name) return i;
  return std::nullopt;
}

long monomial_degree(const WeightedRing& ring, const Monomial& m) {
  if (static_cast<int>(m.size()) != ring.arity())
    throw DomainError("monomial arity does not match ring");
  long d = 0;
  for (int i = 0; i < ring.arity(); ++i) {
    if (m[i] < 0) throw DomainError("negative exponent in monomial");
    d += static_cast<long>(ring.weights[i]) * m[i];
  }
  return d;
}

Polynomial::Polynomial(WeightedRing r, TermMap t) : ring(std::move(r)), terms(std::move(t)) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (static_cast<int>(it->first.size()) != ring.arity())
      throw DomainError("term arity does not match ring");
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (ring != o.ring) throw DomainError("polynomials from different rings");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(ring);
  for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Rat& s) const {
  Polynomial r(ring);
  if (s == 0) return r;
  for (const auto& [m, c] : terms) r.terms.emplace(m, c * s);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (ring != o.ring) throw DomainError("polynomials from different rings");
  Polynomial r(ring);
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  std::set<long> degs;
  for (const auto& [m, c] : p.terms) degs.insert(monomial_degree(p.ring, m));
  return degs.size() == 1;
}

long weighted_degree(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no degree");
  std::set<long> degs;
  for (const auto& [m, c] : p.terms) degs.insert(monomial_degree(p.ring, m));
  if (degs.size() > 1)
    throw NonHomogeneousError(std::vector<long>(degs.begin(), degs.end()));
  return *degs.begin();
}

Polynomial partial_derivative(const Polynomial& p, int var_index) {
  if (var_index < 0 || var_index >= p.ring.arity())
    throw DomainError("variable index out of range");
  Polynomial r(p.ring);
  for (const auto& [m, c] : p.terms) {
    if (m[var_index] == 0) continue;
    Monomial e = m;
    --e[var_index];
    r.add_term(e, c * m[var_index]);
  }
  return r;
}

Polynomial partial_derivative(const Polynomial& p, const std::string& var) {
  auto idx = p.ring.index_of(var);
  if (!idx) throw DomainError("unknown variable '" + var + "'");
  return partial_derivative(p, *idx);
}

std::vector<Monomial> monomials_of_degree(const WeightedRing& ring, long k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  const int n = ring.arity();
  Monomial cur(n, 0);
  // Descending exponent choice at each position yields descending lex order.
  auto rec = [&](auto&& self, int i, long rem) -> void {
    if (i == n - 1) {
      if (rem % ring.weights[i] == 0) {
        cur[i] = static_cast<int>(rem / ring.weights[i]);
        out.push_back(cur);
      }
      return;
    }
    for (long e = rem / ring.weights[i]; e >= 0; --e) {
      cur[i] = static_cast<int>(e);
      self(self, i + 1, rem - e * ring.weights[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

// --- parser -----------------------------------------------------------------

namespace {

struct Parser {
  const std::string& src;
  const WeightedRing& ring;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", start);
    return Int(src.substr(start, pos - start));
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected a variable name", pos);
    while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) ++pos;
    return src.substr(start, pos - start);
  }

  // factor := var | var '^' exponent
  void factor(Monomial& m) {
    std::size_t start = pos;
    std::string var = name();
    auto idx = ring.index_of(var);
    if (!idx) throw ParseError("unknown variable '" + var + "'", start);
    int exp = 1;
    skip_ws();
    if (pos < src.size() && src[pos] == '^') {
      ++pos;
      skip_ws();
      std::size_t estart = pos;
      if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
        throw ParseError("expected a non-negative integer exponent", estart);
      Int e = integer();
      if (e > 1000000) throw ParseError("exponent too large", estart);
      exp = static_cast<int>(e.get_si());
    }
    m[*idx] += exp;
  }

  // term := [coefficient] ('*' factor)* | factor ('*' factor)*
  void term(Polynomial& acc, bool negative) {
    Rat coeff = 1;
    Monomial m(ring.arity(), 0);
    bool have_factor = false;
    skip_ws();
    if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      Int num = integer();
      Int den = 1;
      skip_ws();
      if (pos < src.size() && src[pos] == '/') {
        std::size_t dstart = ++pos;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", dstart);
      }
      coeff = Rat(num, den);
      coeff.canonicalize();
    } else {
      factor(m);
      have_factor = true;
    }
    while (true) {
      skip_ws();
      if (pos < src.size() && src[pos] == '*') {
        ++pos;
        factor(m);
        have_factor = true;
      } else {
        break;
      }
    }
    (void)have_factor;
    if (negative) coeff = -coeff;
    acc.add_term(m, coeff);
  }

  Polynomial run() {
    Polynomial acc(ring);
    skip_ws();
    if (pos >= src.size()) throw ParseError("empty polynomial text", pos);
    bool negative = false;
    if (src[pos] == '+' || src[pos] == '-') {
      negative = (src[pos] == '-');
      ++pos;
    }
    term(acc, negative);
    while (!at_end()) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos;
        term(acc, c == '-');
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
    }
    return acc;
  }
};

std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace

Polynomial parse_polynomial(const std::string& src, const WeightedRing& ring) {
  Parser p{src, ring};
  return p.run();
}

std::string to_string(const WeightedRing& ring, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ring.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    os << ring.variables[i];
    if (m[i] > 1) os << "^" << m[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    const bool neg = sgn(c) < 0;
    Rat mag = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    if (constant) {
      os << rat_to_string(mag);
    } else if (mag == 1) {
      os << to_string(p.ring, m);
    } else {
      os << rat_to_string(mag) << "*" << to_string(p.ring, m);
    }
    first = false;
  }
  return os.str();
}

WeightedRing parse_ring(const std::string& decl) {
  auto semi = decl.find(';');
  if (semi == std::string::npos)
    throw ParseError("ring declaration needs 'vars;weights'", 0);
  auto split = [](const std::string& s, std::size_t base) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto comma = s.find(',', start);
      std::string piece = s.substr(start, comma == std::string::npos ? comma : comma - start);
      // trim
      std::size_t a = piece.find_first_not_of(" \t");
      std::size_t b = piece.find_last_not_of(" \t");
      if (a == std::string::npos) throw ParseError("empty item in list", base + start);
      out.push_back(piece.substr(a, b - a + 1));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  };
  std::vector<std::string> vars = split(decl.substr(0, semi), 0);
  std::vector<std::string> wtext = split(decl.substr(semi + 1), semi + 1);
  std::vector<int> weights;
  for (const auto& w : wtext) {
    try {
      std::size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      weights.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad weight '" + w + "'", semi + 1);
    }
  }
  try {
    return WeightedRing(vars, weights);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace hodgekit
