#pragma once

#include "wittconics/hyperfield.hpp"
#include "wittconics/numeric.hpp"

#include <compare>
#include <functional>
#include <optional>

namespace wittconics {

/// Canonical square class of Q: sign times a positive squarefree core.
struct SquareClassQ {
    int sign = 1;
    Int core = 1;

    Int value() const { return sign < 0 ? Int(-core) : core; }
    Rat rational() const { return Rat(value()); }
    bool operator==(const SquareClassQ&) const = default;
};

SquareClassQ square_class(const Rat& r);

/// A place of Q: the real place or a finite prime.
struct Place {
    bool infinite = false;
    Int p = 0;

    static Place at_infinity();
    static Place finite(const Int& p);  // validates primality

    std::string str() const;
    bool operator==(const Place&) const = default;
    std::strong_ordering operator<=>(const Place& o) const;
};

/// Canonical square class of Q_p. Representatives: {1, u, p, up} for odd p
/// with u the least positive non-residue; {+-1, +-2, +-5, +-10} for p = 2.
struct PadicSquareClass {
    Int p;
    Int rep;

    bool is_square() const { return rep == 1; }
    bool operator==(const PadicSquareClass&) const = default;
};

PadicSquareClass padic_square_class(const Rat& r, const Int& p);

/// Places where a quaternion algebra over Q is non-split; this is its
/// Brauer-class identifier (even cardinality by Hilbert reciprocity).
struct RamificationSet {
    std::vector<Place> places;  // sorted

    bool empty() const { return places.empty(); }
    bool even_cardinality() const { return places.size() % 2 == 0; }
    bool operator==(const RamificationSet&) const = default;
};

/// Hilbert symbol (a,b)_v in {+1,-1}: +1 iff ax^2+by^2=z^2 has a
/// non-trivial solution over the completion at v. Computed exactly: sign
/// logic at the real place, valuation/Legendre at odd p, the epsilon/omega
/// exponent formula at p = 2.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// Product of local symbols over the infinite place, 2, and the odd primes
/// dividing core(a)*core(b) equals +1 (the symbol is +1 elsewhere).
bool reciprocity_check(const Rat& a, const Rat& b);

/// c in D<a,b> over the completion at `at`, or over Q when `at` is empty.
bool represents(const Rat& a, const Rat& b, const Rat& c, const std::optional<Place>& at = std::nullopt);

RamificationSet quaternion_ramification(const Rat& a, const Rat& b);

/// Canonical class representatives behind the non-zero carrier of Q(Q_v),
/// in table order.
std::vector<Int> local_class_representatives(const Place& v);

/// Q(R) for the real place; for finite p the quadratic hyperfield of Q_p
/// (5 elements for odd p, 9 for p = 2), with addition computed from local
/// representation tests.
FiniteHyperfield local_square_class_hyperfield(const Place& v);

/// Q(F_q) for odd prime powers q, built by enumerating a x^2 + b y^2 over
/// F_q and applying the prime-addition rule directly. Serves as the
/// brute-force reference for the quotient/prime constructions.
FiniteHyperfield finite_field_quadratic_hyperfield(const Int& q, const Int& max_q = 4096);

/// The field F_q itself as a hyperfield (singleton addition).
FiniteHyperfield finite_field_hyperfield(const Int& q, const Int& max_q = 512);

/// The canonical embedding Q(F_p) -> Q(Q_p) along unit classes, p odd.
MorphismTable residue_embedding(const Int& p);

using PolyOverQ = std::vector<Rat>;  // coefficients a_0..a_n

/// Gauss valuation min_i v_p(a_i); nullopt encodes +infinity (zero poly).
std::optional<Int> gauss_valuation(const PolyOverQ& f, const Int& p);

/// Extension to quotients f/g by subtraction; g must be non-zero.
std::optional<Int> gauss_valuation(const PolyOverQ& num, const PolyOverQ& den, const Int& p);

/// Level of the completion at v: nullopt (infinite) for R, 1 for p = 1 mod 4,
/// 2 for p = 3 mod 4, 4 for Q_2. General dyadic extensions are out of scope.
std::optional<int> local_level(const Place& v);

/// A hyperfield presented by computable maps instead of tables; carries
/// Q(Q) (infinite carrier) and the finite local models. Membership is
/// defined on canonical representatives; inputs are canonicalized first.
struct OracleHyperfield {
    std::function<Rat(const Rat&)> canonical;
    std::function<bool(const Rat& c, const Rat& a, const Rat& b)> add_contains;
    std::function<Rat(const Rat&, const Rat&)> mul;
    std::function<Rat(const Rat&)> neg;
    std::optional<std::vector<Rat>> carrier;  // present when finite
};

/// Q(Q): elements are 0 and the square classes of Q as signed squarefree
/// integers, addition evaluated lazily through global representation tests.
OracleHyperfield rational_quadratic_hyperfield();

/// Q(Q_v) as an oracle with finite carrier.
OracleHyperfield local_quadratic_hyperfield_oracle(const Place& v);

/// Tabulates an oracle with finite carrier; agrees with the direct table
/// builders for the same field.
FiniteHyperfield tabulate(const OracleHyperfield& H);

namespace oracle {

/// Brute-force local representation test: searches for a unit-coordinate
/// (Hensel-liftable) solution of a x^2 + b y^2 = c z^2 modulo p^3 (odd p),
/// 2^8 (p = 2), or decides by signs at the real place. Independent of the
/// Hilbert symbol formulas.
bool represents_local(const Rat& a, const Rat& b, const Rat& c, const Place& v);

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

} // namespace oracle

} // namespace wittconics
