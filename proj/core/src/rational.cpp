#include "hypfan/rational.hpp"

#include <cctype>
#include <sstream>

#include "hypfan/error.hpp"

namespace hypfan {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::MalformedInput, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Vec parse_vector(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty vector");
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

int sign(const Rational& q) { return sgn(q); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

namespace {
void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch,
                "vector sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}
}  // namespace

Rational dot(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Vec negate(const Vec& a) { return scale(a, Rational(-1)); }

Rational cross2(const Vec& a, const Vec& b) {
  if (a.size() != 2 || b.size() != 2)
    throw Error(ErrorCode::DimensionMismatch, "cross2 needs planar vectors");
  return a[0] * b[1] - a[1] * b[0];
}

Vec cross3(const Vec& a, const Vec& b) {
  if (a.size() != 3 || b.size() != 3)
    throw Error(ErrorCode::DimensionMismatch, "cross3 needs spatial vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const Vec& a, const Vec& b, const Vec& c) { return dot(cross3(a, b), c); }

bool same_direction(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  if (is_zero(a) || is_zero(b)) return false;
  // b = t a with t > 0: all 2x2 minors vanish and some coordinate agrees in sign.
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0) return sgn(a[i]) == sgn(b[i]);
  return false;
}

namespace {

// Row-reduces `m` in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(std::vector<Vec>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(std::span<const Vec> vectors) {
  if (vectors.empty()) return 0;
  std::vector<Vec> m(vectors.begin(), vectors.end());
  return row_reduce(m, m.front().size()).size();
}

bool in_span(const Vec& w, std::span<const Vec> vectors) {
  if (vectors.empty()) return is_zero(w);
  std::vector<Vec> with(vectors.begin(), vectors.end());
  std::size_t r = rank(with);
  with.push_back(w);
  return rank(with) == r;
}

std::optional<Vec> solve_in_basis(std::span<const Vec> columns, const Vec& rhs) {
  const std::size_t k = columns.size();
  const std::size_t n = rhs.size();
  for (const auto& c : columns)
    if (c.size() != n) throw Error(ErrorCode::DimensionMismatch, "column size differs from rhs");
  // Augmented n x (k+1) matrix.
  std::vector<Vec> m(n, Vec(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = columns[j][i];
    m[i][k] = rhs[i];
  }
  auto pivots = row_reduce(m, k + 1);
  const bool inconsistent = !pivots.empty() && pivots.back() == k;
  if (pivots.size() - (inconsistent ? 1 : 0) < k)
    throw Error(ErrorCode::DegenerateCorner, "basis vectors are linearly dependent");
  if (inconsistent) return std::nullopt;
  Vec alpha(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) alpha[pivots[r]] = m[r][k];
  return alpha;
}

}  // namespace hypfan
