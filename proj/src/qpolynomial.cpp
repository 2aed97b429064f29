#include "degspec/qpolynomial.hpp"

#include <sstream>

#include "degspec/errors.hpp"

namespace degspec {

QPolynomial::QPolynomial(QVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

QPolynomial QPolynomial::monomial(const Rational& c, unsigned degree) {
  QVector v(degree + 1);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational QPolynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

QPolynomial QPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  QVector d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return QPolynomial(std::move(d));
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return {};
  return *this * (1 / leading());
}

Rational QPolynomial::evaluate(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QMatrix QPolynomial::evaluate(const QMatrix& m) const {
  if (!m.is_square()) throw DimensionError("polynomial of a non-square matrix");
  QMatrix acc(m.rows(), m.cols());
  const QMatrix id = QMatrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * (*it);
  return acc;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QVector c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPolynomial(std::move(c));
}

QPolynomial operator*(QPolynomial a, const Rational& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

std::string QPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = ::abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw ParameterError("polynomial division by zero");
  QVector rem = a.coefficients();
  const int db = b.degree();
  const Rational lead_inv = 1 / b.leading();
  if (a.degree() < db) return {QPolynomial{}, a};
  QVector quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficient(static_cast<unsigned>(j));
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPolynomial charpoly(const QMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // c[n] = 1; N_k = M N_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(M N_k) / k.
  QVector c(n + 1);
  c[n] = 1;
  QMatrix acc(n, n);
  const QMatrix id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc + id * c[n - k + 1];
    c[n - k] = -(m * acc).trace() / static_cast<unsigned long>(k);
  }
  return QPolynomial(std::move(c));
}

std::vector<std::pair<QPolynomial, int>> square_free_decomposition(const QPolynomial& f) {
  if (f.is_zero()) throw ParameterError("square-free decomposition of the zero polynomial");
  std::vector<std::pair<QPolynomial, int>> out;
  if (f.degree() == 0) return out;
  const QPolynomial fm = f.monic();
  const QPolynomial df = fm.derivative();
  QPolynomial a = gcd(fm, df);
  QPolynomial b = divmod(fm, a).first;
  QPolynomial c = divmod(df, a).first;
  QPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    QPolynomial g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

int sign_changes(const std::vector<QPolynomial>& chain, bool at_plus_infinity) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int s = sgn(p.leading());
    if (!at_plus_infinity && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const QPolynomial& f) {
  if (f.is_zero()) throw ParameterError("root count of the zero polynomial");
  // Distinct real roots of f equal those of its square-free part.
  QPolynomial g = gcd(f, f.derivative());
  QPolynomial sq = divmod(f, g).first;
  std::vector<QPolynomial> chain{sq, sq.derivative()};
  while (!chain.back().is_zero()) {
    QPolynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(r * Rational(-1));
  }
  return sign_changes(chain, false) - sign_changes(chain, true);
}

}  // namespace degspec
