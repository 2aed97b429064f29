#include "degspec/mpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>

#include "degspec/errors.hpp"

namespace degspec {

MPoly MPoly::constant(std::size_t nvars, const Integer& c) {
  MPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return term(e, 1);
}

MPoly MPoly::term(const Exponent& e, const Integer& c) {
  MPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != nvars_) throw DimensionError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

const std::pair<const Exponent, Integer>& MPoly::leading_term() const {
  if (terms_.empty()) throw ParameterError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.nvars_ != nvars_) throw DimensionError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.nvars_ != nvars_) throw DimensionError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionError("variable count mismatch");
  MPoly out(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::substitute(const std::vector<MPoly>& values) const {
  if (values.size() != nvars_) throw DimensionError("substitution needs one value per variable");
  if (values.empty()) return *this;
  const std::size_t m = values.front().nvars();
  for (const auto& v : values)
    if (v.nvars() != m) throw DimensionError("substituted values disagree on variable count");

  // powers[i][j] = values[i]^j, built lazily.
  std::vector<std::vector<MPoly>> powers(nvars_);
  auto power_of = [&](std::size_t i, int j) -> const MPoly& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(constant(m, 1));
    while (static_cast<int>(row.size()) <= j) row.push_back(row.back() * values[i]);
    return row[static_cast<std::size_t>(j)];
  };

  MPoly out(m);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(m, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * power_of(i, e[i]);
    out += t;
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = true;
    for (int x : e)
      if (x != 0) unit = false;
    if (mag != 1 || unit) os << mag.get_str();
    bool need_star = mag != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << i;
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

Integer integer_content(const MPoly& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Exponent monomial_content(const MPoly& p) {
  if (p.is_zero()) return Exponent(p.nvars(), 0);
  Exponent m = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

MPoly divide_by_monomial(const MPoly& p, const Exponent& m) {
  MPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    Exponent q = e;
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] -= m[i];
      if (q[i] < 0) throw ParameterError("monomial does not divide polynomial");
    }
    out.add_term(q, c);
  }
  return out;
}

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw ParameterError("division by the zero polynomial");
  if (a.nvars() != b.nvars()) throw DimensionError("variable count mismatch");
  const auto& [eb, cb] = b.leading_term();
  MPoly q(a.nvars());
  MPoly r = a;
  Exponent e(a.nvars());
  while (!r.is_zero()) {
    const auto& [er, cr] = r.leading_term();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    Integer c = cr / cb;
    MPoly t = MPoly::term(e, c);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

MPoly normalized(MPoly p) {
  if (!p.is_zero() && p.leading_term().second < 0) p = -p;
  return p;
}

// Coefficients of p viewed as a polynomial in `var`, keyed by the power.
std::map<int, MPoly> split(const MPoly& p, std::size_t var) {
  std::map<int, MPoly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[var] = 0;
    auto [it, _] = out.try_emplace(e[var], MPoly(p.nvars()));
    it->second.add_term(rest, c);
  }
  return out;
}

MPoly var_power(std::size_t nvars, std::size_t var, int n) {
  Exponent e(nvars, 0);
  e[var] = n;
  return MPoly::term(e, 1);
}

MPoly divide_or_throw(const MPoly& a, const MPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error("internal: content does not divide polynomial");
  return *std::move(q);
}

MPoly content_in(const MPoly& p, std::size_t var);

MPoly primitive_in(const MPoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  return divide_or_throw(p, content_in(p, var));
}

// Pseudo-remainder of a by b in `var`; deg_var(b) >= 1.
MPoly prem(MPoly a, const MPoly& b, std::size_t var) {
  const int db = b.degree_in(var);
  const MPoly lb = split(b, var).rbegin()->second;
  while (!a.is_zero() && a.degree_in(var) >= db) {
    const int da = a.degree_in(var);
    const MPoly la = split(a, var).rbegin()->second;
    a = lb * a - la * var_power(a.nvars(), var, da - db) * b;
  }
  return a;
}

using Residue = std::uint64_t;
using UPoly = std::vector<Residue>;  // coefficient i multiplies t^i, mod p

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Residue pow_mod(Residue b, Residue e, Residue p) {
  Residue r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

UPoly mul_mod(const UPoly& a, const UPoly& b, Residue p) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

UPoly gcd_mod(UPoly a, UPoly b, Residue p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const Residue inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size() && !a.empty()) {
      const Residue q = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (p - q) * b[i] % p) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

Residue residue(const Integer& c, Residue p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
  return r.get_ui();
}

// f(t u + v) mod p.
UPoly restrict_to_line(const MPoly& f, const std::vector<Residue>& u, const std::vector<Residue>& v, Residue p) {
  const std::size_t n = f.nvars();
  std::vector<std::vector<UPoly>> powers(n);
  UPoly out;
  for (const auto& [e, c] : f.terms()) {
    UPoly t{residue(c, p)};
    for (std::size_t j = 0; j < n; ++j) {
      auto& row = powers[j];
      if (row.empty()) row.push_back(UPoly{1});
      while (static_cast<int>(row.size()) <= e[j]) row.push_back(mul_mod(row.back(), UPoly{v[j], u[j]}, p));
      if (e[j] > 0) t = mul_mod(t, row[static_cast<std::size_t>(e[j])], p);
    }
    if (out.size() < t.size()) out.resize(t.size(), 0);
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = (out[i] + t[i]) % p;
  }
  trim(out);
  return out;
}

}  // namespace

bool coprime_certificate(const std::vector<MPoly>& polys) {
  if (polys.size() < 2) return false;
  const std::size_t n = polys.front().nvars();
  for (const auto& f : polys)
    if (f.is_zero() || !f.is_homogeneous() || f.nvars() != n) return false;
  static constexpr Residue kPrimes[] = {2147483629ULL, 2147483587ULL, 2147483579ULL};
  // Fixed seed: the certificate only decides how fast the answer comes, never
  // what it is, but reruns should still do identical work.
  std::mt19937_64 rng(0x5eedULL);
  for (Residue p : kPrimes) {
    std::uniform_int_distribution<Residue> pick(1, p - 1);
    std::vector<Residue> u(n), v(n);
    for (auto& x : u) x = pick(rng);
    for (auto& x : v) x = pick(rng);
    // Leading t-coefficient of f_0 on the line is f_0(u); it must survive mod p.
    std::vector<Residue> zero(n, 0);
    const UPoly lead = restrict_to_line(polys.front(), zero, u, p);
    if (lead.empty()) continue;
    UPoly g = restrict_to_line(polys.front(), u, v, p);
    if (static_cast<int>(g.size()) - 1 != polys.front().total_degree()) continue;
    for (std::size_t i = 1; i < polys.size() && g.size() > 1; ++i) g = gcd_mod(g, restrict_to_line(polys[i], u, v, p), p);
    if (g.size() == 1) return true;
  }
  return false;
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("variable count mismatch");
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);

  std::size_t nv = a.nvars();
  std::optional<std::size_t> main;
  for (std::size_t v = nv; v-- > 0;)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      main = v;
      break;
    }
  if (!main) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.leading_term().second.get_mpz_t(), b.leading_term().second.get_mpz_t());
    return MPoly::constant(nv, g);
  }
  const std::size_t v = *main;

  const MPoly ca = content_in(a, v);
  const MPoly cb = content_in(b, v);
  const MPoly g = gcd(ca, cb);
  MPoly pa = divide_or_throw(a, ca);
  MPoly pb = divide_or_throw(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  while (!pb.is_zero() && pb.degree_in(v) > 0) {
    MPoly r = prem(pa, pb, v);
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  MPoly part = pb.is_zero() ? primitive_in(pa, v) : MPoly::constant(nv, 1);
  return normalized(g * normalized(part));
}

namespace {

MPoly content_in(const MPoly& p, std::size_t var) {
  MPoly g(p.nvars());
  for (const auto& [power, coeff] : split(p, var)) {
    g = gcd(g, coeff);
    if (g.total_degree() == 0 && g.leading_term().second == 1) break;
  }
  return g;
}

}  // namespace

}  // namespace degspec
