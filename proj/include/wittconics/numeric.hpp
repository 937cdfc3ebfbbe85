#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wittconics {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "n", "p/q" or a decimal like "-1.25" into an exact rational.
/// Throws std::invalid_argument naming the offending token.
Rat parse_rational(std::string_view token);

/// Parses an arbitrary-precision integer. Throws std::invalid_argument.
Int parse_integer(std::string_view token);

/// Mathematical remainder in [0, m).
Int math_mod(const Int& a, const Int& m);

Int pow_mod(Int base, Int exp, const Int& mod);

/// Inverse of a modulo m; a and m must be coprime.
Int mod_inverse(const Int& a, const Int& m);

bool is_prime(const Int& n);

/// Prime factorization by trial division (inputs are desk-scale).
/// Throws std::length_error if a composite cofactor resists factoring.
std::vector<std::pair<Int, int>> factorize(Int n);

/// n = sign * core * square with core positive squarefree. n must be non-zero.
std::pair<int, Int> squarefree_kernel(const Int& n);

bool is_squarefree(const Int& n);

/// Legendre symbol (a|p) for odd prime p; 0 when p divides a.
int legendre_symbol(const Int& a, const Int& p);

/// Least positive quadratic non-residue modulo the odd prime p.
Int least_nonresidue(const Int& p);

/// p-adic valuation of a non-zero integer.
long valuation(Int n, const Int& p);

/// p-adic valuation of a non-zero rational.
long rat_valuation(const Rat& r, const Int& p);

Int isqrt(const Int& n);

/// If n is a perfect square, returns its non-negative root.
std::optional<Int> perfect_square_root(const Int& n);

/// Checked narrowing for loops that want machine integers.
long long to_ll(const Int& n);

// Dense polynomials over Q, coefficients c[0] + c[1] x + ...
using PolyQ = std::vector<Rat>;

PolyQ poly_trim(PolyQ f);
PolyQ poly_add(const PolyQ& f, const PolyQ& g);
PolyQ poly_sub(const PolyQ& f, const PolyQ& g);
PolyQ poly_mul(const PolyQ& f, const PolyQ& g);
PolyQ poly_scale(const PolyQ& f, const Rat& c);
bool poly_is_zero(const PolyQ& f);

} // namespace wittconics
