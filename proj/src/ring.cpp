#include "hyspec/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace hyspec {

RingSpec RingSpec::zn(int n) {
  RingSpec s;
  s.kind = Kind::Zn;
  s.n = n;
  return s;
}

RingSpec RingSpec::quot_poly(int n, std::vector<int> f) {
  RingSpec s;
  s.kind = Kind::QuotPoly;
  s.n = n;
  s.poly = std::move(f);
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> fs) {
  RingSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(fs);
  return s;
}

RingSpec RingSpec::tables(int count, std::vector<int> add, std::vector<int> mul,
                          int zero, int one, std::string label) {
  RingSpec s;
  s.kind = Kind::Tables;
  s.count = count;
  s.add_table = std::move(add);
  s.mul_table = std::move(mul);
  s.zero = zero;
  s.one = one;
  s.label = std::move(label);
  return s;
}

namespace {

std::string poly_to_string(const std::vector<int>& coeffs) {
  std::string out;
  for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d) {
    int c = coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (d == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace

std::string RingSpec::describe() const {
  if (!label.empty()) return label;
  switch (kind) {
    case Kind::Zn:
      return "Z" + std::to_string(n);
    case Kind::QuotPoly:
      return "Z" + std::to_string(n) + "[x]/(" + poly_to_string(poly) + ")";
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " x ";
        out += factors[i].describe();
      }
      return out;
    }
    case Kind::Tables:
      return "tables<" + std::to_string(count) + ">";
  }
  return "?";
}

int FiniteRing::pow(int a, int k) const {
  int r = a;
  for (int i = 1; i < k; ++i) r = mul(r, a);
  return r;
}

namespace {

struct RawRing {
  int n = 0;
  std::vector<std::uint16_t> add, mul;
  int zero = 0, one = 0;
  std::vector<std::string> names;
};

RawRing build_zn(int n) {
  if (n < 2) throw BadSpec("Zn requires n >= 2, got n=" + std::to_string(n));
  RawRing r;
  r.n = n;
  r.add.resize(static_cast<std::size_t>(n) * n);
  r.mul.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
      r.mul[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
    }
  r.zero = 0;
  r.one = 1;
  r.names.resize(n);
  for (int a = 0; a < n; ++a) r.names[a] = std::to_string(a);
  return r;
}

RawRing build_quot_poly(int n, const std::vector<int>& f_in) {
  if (n < 2) throw BadSpec("QuotPoly requires n >= 2");
  if (f_in.size() < 2) throw BadSpec("QuotPoly requires deg(f) >= 1");
  std::vector<int> f(f_in);
  for (auto& c : f) c = ((c % n) + n) % n;
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  if (f.size() < 2) throw BadSpec("QuotPoly requires deg(f) >= 1");
  if (f.back() != 1) throw BadSpec("QuotPoly requires a monic modulus");
  const int d = static_cast<int>(f.size()) - 1;

  // count = n^d
  long long count = 1;
  for (int i = 0; i < d; ++i) {
    count *= n;
    if (count > Caps::hard_max) throw CapExceeded("quotient ring exceeds hard size cap");
  }
  const int N = static_cast<int>(count);

  // element index <-> coefficient vector, c_0 least significant digit
  auto decode = [&](int idx) {
    std::vector<int> c(d);
    for (int i = 0; i < d; ++i) {
      c[i] = idx % n;
      idx /= n;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = d - 1; i >= 0; --i) idx = idx * n + c[i];
    return idx;
  };

  // reduce a polynomial of degree < 2d mod the monic f, coefficients mod n
  auto reduce = [&](std::vector<int> p) {
    for (int deg = static_cast<int>(p.size()) - 1; deg >= d; --deg) {
      int c = p[deg] % n;
      if (c == 0) continue;
      for (int i = 0; i <= d; ++i)
        p[deg - d + i] = ((p[deg - d + i] - c * f[i]) % n + n * n) % n;
    }
    p.resize(d);
    for (auto& c : p) c %= n;
    return p;
  };

  RawRing r;
  r.n = N;
  r.add.resize(static_cast<std::size_t>(N) * N);
  r.mul.resize(static_cast<std::size_t>(N) * N);
  std::vector<std::vector<int>> coef(N);
  for (int i = 0; i < N; ++i) coef[i] = decode(i);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> s(d);
      for (int i = 0; i < d; ++i) s[i] = (coef[a][i] + coef[b][i]) % n;
      r.add[a * N + b] = static_cast<std::uint16_t>(encode(s));
      std::vector<int> p(2 * d - 1, 0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p[i + j] = (p[i + j] + coef[a][i] * coef[b][j]) % n;
      r.mul[a * N + b] = static_cast<std::uint16_t>(encode(reduce(p)));
    }
  r.zero = 0;
  r.one = 1;
  r.names.resize(N);
  for (int i = 0; i < N; ++i) r.names[i] = poly_to_string(coef[i]);
  return r;
}

RawRing build_product(const std::vector<RingSpec>& factors, const Caps& caps);

RawRing build_raw(const RingSpec& spec, const Caps& caps) {
  switch (spec.kind) {
    case RingSpec::Kind::Zn:
      return build_zn(spec.n);
    case RingSpec::Kind::QuotPoly:
      return build_quot_poly(spec.n, spec.poly);
    case RingSpec::Kind::Product:
      return build_product(spec.factors, caps);
    case RingSpec::Kind::Tables: {
      const int N = spec.count;
      if (N < 2) throw BadSpec("table ring needs at least 2 elements");
      if (static_cast<int>(spec.add_table.size()) != N * N ||
          static_cast<int>(spec.mul_table.size()) != N * N)
        throw BadSpec("operation tables must be square and total");
      RawRing r;
      r.n = N;
      r.add.resize(static_cast<std::size_t>(N) * N);
      r.mul.resize(static_cast<std::size_t>(N) * N);
      for (int i = 0; i < N * N; ++i) {
        int a = spec.add_table[i], m = spec.mul_table[i];
        if (a < 0 || a >= N || m < 0 || m >= N)
          throw BadSpec("table entry out of range");
        r.add[i] = static_cast<std::uint16_t>(a);
        r.mul[i] = static_cast<std::uint16_t>(m);
      }
      if (spec.zero < 0 || spec.zero >= N || spec.one < 0 || spec.one >= N)
        throw BadSpec("zero/one index out of range");
      r.zero = spec.zero;
      r.one = spec.one;
      r.names.resize(N);
      for (int i = 0; i < N; ++i) r.names[i] = std::to_string(i);
      return r;
    }
  }
  throw BadSpec("unknown ring spec kind");
}

RawRing build_product(const std::vector<RingSpec>& factors, const Caps& caps) {
  if (factors.empty()) throw BadSpec("empty product");
  std::vector<RawRing> parts;
  parts.reserve(factors.size());
  long long total = 1;
  for (const auto& f : factors) {
    parts.push_back(build_raw(f, caps));
    total *= parts.back().n;
    if (total > Caps::hard_max) throw CapExceeded("product ring exceeds hard size cap");
  }
  const int N = static_cast<int>(total);
  const int k = static_cast<int>(parts.size());

  // first component most significant: lexicographic on component residues
  std::vector<int> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * parts[i + 1].n;
  auto decode = [&](int idx) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = idx / stride[i];
      idx %= stride[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx += c[i] * stride[i];
    return idx;
  };

  RawRing r;
  r.n = N;
  r.add.resize(static_cast<std::size_t>(N) * N);
  r.mul.resize(static_cast<std::size_t>(N) * N);
  std::vector<std::vector<int>> comp(N);
  for (int i = 0; i < N; ++i) comp[i] = decode(i);
  std::vector<int> tmp(k);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      for (int i = 0; i < k; ++i)
        tmp[i] = parts[i].add[comp[a][i] * parts[i].n + comp[b][i]];
      r.add[a * N + b] = static_cast<std::uint16_t>(encode(tmp));
      for (int i = 0; i < k; ++i)
        tmp[i] = parts[i].mul[comp[a][i] * parts[i].n + comp[b][i]];
      r.mul[a * N + b] = static_cast<std::uint16_t>(encode(tmp));
    }
  std::vector<int> z(k), o(k);
  for (int i = 0; i < k; ++i) {
    z[i] = parts[i].zero;
    o[i] = parts[i].one;
  }
  r.zero = encode(z);
  r.one = encode(o);
  r.names.resize(N);
  for (int i = 0; i < N; ++i) {
    std::string s = "(";
    for (int j = 0; j < k; ++j) {
      if (j) s += ",";
      s += parts[j].names[comp[i][j]];
    }
    s += ")";
    r.names[i] = s;
  }
  return r;
}

void validate_axioms(const RawRing& r) {
  const int N = r.n;
  auto add = [&](int a, int b) { return r.add[a * N + b]; };
  auto mul = [&](int a, int b) { return r.mul[a * N + b]; };
  auto fail = [&](const char* law, int a, int b, int c) {
    throw AxiomViolation(std::string("ring law failed: ") + law + " at (" +
                         std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
  };
  if (r.zero == r.one) throw BadSpec("trivial ring rejected (0 = 1)");

  for (int a = 0; a < N; ++a) {
    if (add(a, r.zero) != a) fail("a+0=a", a, r.zero, -1);
    if (mul(a, r.one) != a) fail("a*1=a", a, r.one, -1);
    bool has_neg = false;
    for (int b = 0; b < N; ++b)
      if (add(a, b) == r.zero) { has_neg = true; break; }
    if (!has_neg) fail("additive inverse exists", a, -1, -1);
    for (int b = 0; b < N; ++b) {
      if (add(a, b) != add(b, a)) fail("a+b=b+a", a, b, -1);
      if (mul(a, b) != mul(b, a)) fail("a*b=b*a", a, b, -1);
    }
  }

  // triple laws: exhaustive up to 256 elements, sampled above
  auto check_triple = [&](int a, int b, int c) {
    if (add(add(a, b), c) != add(a, add(b, c))) fail("(a+b)+c=a+(b+c)", a, b, c);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("(ab)c=a(bc)", a, b, c);
    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("a(b+c)=ab+ac", a, b, c);
  };
  if (N <= 256) {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c) check_triple(a, b, c);
  } else {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    auto next = [&s]() {
      s ^= s << 13; s ^= s >> 7; s ^= s << 17;
      return s;
    };
    for (int i = 0; i < 100000; ++i)
      check_triple(static_cast<int>(next() % N), static_cast<int>(next() % N),
                   static_cast<int>(next() % N));
  }
}

}  // namespace

FiniteRing build_ring(const RingSpec& spec, const Caps& caps) {
  RawRing raw = build_raw(spec, caps);
  const int cap = spec.kind == RingSpec::Kind::Tables ? caps.tables_max
                                                      : caps.structured_max;
  if (raw.n > Caps::hard_max)
    throw CapExceeded("ring size " + std::to_string(raw.n) + " above hard cap");
  if (raw.n > cap)
    throw CapExceeded("ring size " + std::to_string(raw.n) + " above cap " +
                      std::to_string(cap));
  validate_axioms(raw);

  FiniteRing ring;
  ring.n_ = raw.n;
  ring.add_ = std::move(raw.add);
  ring.mul_ = std::move(raw.mul);
  ring.zero_ = raw.zero;
  ring.one_ = raw.one;
  ring.spec_ = spec;
  if (ring.spec_.label.empty()) ring.spec_.label = spec.describe();
  ring.names_ = std::move(raw.names);
  ring.neg_.resize(ring.n_);
  for (int a = 0; a < ring.n_; ++a)
    for (int b = 0; b < ring.n_; ++b)
      if (ring.add(a, b) == ring.zero_) {
        ring.neg_[a] = static_cast<std::uint16_t>(b);
        break;
      }
  return ring;
}

bool is_regular(const FiniteRing& ring) {
  const int N = ring.size();
  for (int a = 0; a < N; ++a) {
    bool found = false;
    for (int x = 0; x < N && !found; ++x)
      if (ring.mul(ring.mul(a, x), a) == a) found = true;
    if (!found) return false;
  }
  return true;
}

bool has_root_property(const FiniteRing& ring) {
  const int N = ring.size();
  std::vector<char> attainable(N, 0);
  std::vector<char> seen(N);
  for (int y = 0; y < N; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    int p = ring.mul(y, y);  // y^2
    while (!seen[p]) {
      seen[p] = 1;
      attainable[p] = 1;
      p = ring.mul(p, y);
    }
  }
  for (int x = 0; x < N; ++x)
    if (!attainable[x]) return false;
  return true;
}

}  // namespace hyspec
