#pragma once

// Exact rational scalars and small dense vectors. Everything geometric in
// hypfan goes through these types; there is no floating-point path.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypfan {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Builds num/den in canonical form. Throws Error(MalformedInput) on den == 0.
Rational make_rational(long num, long den = 1);

/// Parses "3", "-3", "3/2". Throws Error(ParseError).
Rational parse_rational(const std::string& text);

/// Parses a comma separated vector such as "2,1" or "3/2,1,-1".
Vec parse_vector(const std::string& text);

std::string to_string(const Rational& q);
std::string to_string(const Vec& v);

int sign(const Rational& q);
bool is_zero(const Vec& v);

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
Vec negate(const Vec& a);

/// z-component of the planar cross product a x b.
Rational cross2(const Vec& a, const Vec& b);
Vec cross3(const Vec& a, const Vec& b);
Rational det3(const Vec& a, const Vec& b, const Vec& c);

/// True iff b = t * a for some t > 0.
bool same_direction(const Vec& a, const Vec& b);

/// Rank of a family of vectors (all of the same length).
std::size_t rank(std::span<const Vec> vectors);

/// True iff w lies in the linear span of `vectors` (span of nothing is {0}).
bool in_span(const Vec& w, std::span<const Vec> vectors);

/// Solves sum_i alpha_i * columns[i] = rhs exactly. Returns nullopt when the
/// system is inconsistent. The columns must be linearly independent; throws
/// Error(DegenerateCorner) otherwise.
std::optional<Vec> solve_in_basis(std::span<const Vec> columns, const Vec& rhs);

}  // namespace hypfan
