#include "hyspec/dsl.hpp"

#include <cctype>

#include "hyspec/errors.hpp"

namespace hyspec {

namespace {

std::string strip(const std::string& raw) {
  std::string t;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  return t;
}

int read_int(const std::string& t, std::size_t& i, std::size_t offset) {
  if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
    throw ParseError("expected a number", offset + i);
  long v = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
    v = v * 10 + (t[i] - '0');
    if (v > 1000000) throw ParseError("number too large", offset + i);
    ++i;
  }
  return static_cast<int>(v);
}

}  // namespace

std::vector<int> parse_poly(const std::string& text, int n) {
  std::string t = strip(text);
  if (t.empty()) throw ParseError("empty polynomial", 0);

  std::vector<int> coef;  // low degree first
  auto bump = [&](int deg, int c) {
    if (static_cast<std::size_t>(deg) >= coef.size()) coef.resize(deg + 1, 0);
    coef[deg] = (coef[deg] + c) % n;
  };

  std::size_t i = 0;
  while (i < t.size()) {
    const std::size_t mono_start = i;
    int c = 1;
    if (std::isdigit(static_cast<unsigned char>(t[i]))) c = read_int(t, i, 0);
    int deg = 0;
    if (i < t.size() && t[i] == 'x') {
      ++i;
      deg = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        deg = read_int(t, i, 0);
      }
    }
    if (i == mono_start) throw ParseError("expected a monomial", i);
    bump(deg, c % n);
    if (i < t.size()) {
      if (t[i] != '+') throw ParseError("expected '+'", i);
      ++i;
      if (i == t.size()) throw ParseError("trailing '+'", i - 1);
    }
  }
  while (coef.size() > 1 && coef.back() == 0) coef.pop_back();
  return coef;
}

std::vector<int> find_irreducible(int p, int k) {
  // monic x^k + c_{k-1} x^{k-1} + ... + c_0; scan lower coefficients in base p
  long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long code = 0; code < total; ++code) {
    std::vector<int> f(k + 1, 0);
    long c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[k] = 1;
    try {
      FiniteRing q = build_ring(RingSpec::quot_poly(p, f));
      bool field = true;
      for (int a = 1; a < q.size() && field; ++a) {
        bool inv = false;
        for (int b = 1; b < q.size(); ++b)
          if (q.mul(a, b) == q.one()) { inv = true; break; }
        if (!inv) field = false;
      }
      if (field) return f;
    } catch (const Error&) {
      continue;
    }
  }
  throw BadSpec("no irreducible polynomial found (is p prime?)");
}

namespace {

// `t` is one whitespace-stripped product factor; `offset` locates it in the
// stripped full expression, for error positions
RingSpec parse_term(const std::string& t, std::size_t offset) {
  std::size_t i = 0;

  if (t.size() >= 3 && t.compare(0, 3, "GF(") == 0) {
    i = 3;
    int p = read_int(t, i, offset);
    int k = 1;
    if (i < t.size() && t[i] == '^') {
      ++i;
      k = read_int(t, i, offset);
    } else {
      // accept GF(q) for a prime power q
      int q = p, base = 0;
      for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) { base = d; break; }
      if (base) {
        k = 0;
        p = base;
        while (q > 1) {
          if (q % base != 0)
            throw ParseError("GF order is not a prime power", offset + 3);
          q /= base;
          ++k;
        }
      }
    }
    if (i >= t.size() || t[i] != ')') throw ParseError("expected ')'", offset + i);
    if (++i != t.size()) throw ParseError("trailing input", offset + i);
    if (k == 1) {
      RingSpec spec = RingSpec::zn(p);
      spec.label = "GF(" + std::to_string(p) + ")";
      return spec;
    }
    RingSpec spec = RingSpec::quot_poly(p, find_irreducible(p, k));
    spec.label = "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    return spec;
  }

  if (!t.empty() && t[0] == 'Z') {
    i = 1;
    int n = read_int(t, i, offset);
    if (i == t.size()) return RingSpec::zn(n);
    if (t.compare(i, 5, "[x]/(") == 0) {
      i += 5;
      std::size_t close = t.rfind(')');
      if (close == std::string::npos || close < i)
        throw ParseError("expected ')'", offset + t.size());
      if (close + 1 != t.size()) throw ParseError("trailing input", offset + close + 1);
      return RingSpec::quot_poly(n, parse_poly(t.substr(i, close - i), n));
    }
    throw ParseError("unexpected input after modulus", offset + i);
  }

  throw ParseError("expected Z<n>, GF(...), or Z<n>[x]/(...)", offset);
}

}  // namespace

RingSpec parse_ring_dsl(const std::string& text) {
  std::string t = strip(text);
  if (t.empty()) throw ParseError("empty ring expression", 0);

  // split on 'x' at bracket depth 0 (the product separator); 'x' inside
  // [..] or (..) belongs to a polynomial
  std::vector<std::pair<std::size_t, std::string>> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == 'x' && depth == 0) {
      terms.emplace_back(start, t.substr(start, i - start));
      start = i + 1;
    }
  }
  terms.emplace_back(start, t.substr(start));

  std::vector<RingSpec> specs;
  for (auto& [off, term] : terms) {
    if (term.empty()) throw ParseError("empty product factor", off);
    specs.push_back(parse_term(term, off));
  }
  if (specs.size() == 1) return specs.front();
  return RingSpec::product(std::move(specs));
}

}  // namespace hyspec
