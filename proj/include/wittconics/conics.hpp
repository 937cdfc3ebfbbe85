#pragma once

#include "wittconics/localglobal.hpp"

#include <array>
#include <optional>
#include <variant>

namespace wittconics {

/// The function field Q_{a,b} of the conic a x^2 + b y^2 = 1 over Q,
/// stored by the canonical square classes of a and b.
struct ConicField {
    SquareClassQ a, b;

    static ConicField over_q(const Rat& a, const Rat& b);
    bool operator==(const ConicField&) const = default;
};

struct RationalPoint {
    Rat x, y;
};

/// True iff the quaternion algebra (a,b/Q) splits, equivalently the conic
/// has a rational point and Q_{a,b} is purely transcendental.
bool splits(const Rat& a, const Rat& b);

/// Completeness bound for the bounded point search.
Int holzer_point_bound(const Rat& a, const Rat& b);

/// Bounded search for a rational point on a x^2 + b y^2 = 1 with
/// numerators and denominators at most `bound`. Complete once bound
/// reaches holzer_point_bound: a split conic always yields a point there.
/// The search is decisive for existence (a point found in the small
/// Holzer box, or none exists at all), independent of Hilbert symbols.
std::optional<RationalPoint> find_rational_point(const Rat& a, const Rat& b, const Int& bound);

/// Rational parametrization X(z), Y(z) through p0 with
/// a X(z)^2 + b Y(z)^2 = 1 as an exact identity (verified on construction).
/// X and Y share the denominator.
struct ConicParametrization {
    PolyQ x_num, y_num, den;
};

ConicParametrization parametrize(const Rat& a, const Rat& b, const RationalPoint& p0);

/// Q_{a,b} and Q_{c,d} are Q-isomorphic iff the defining quaternion
/// algebras have equal ramification sets.
bool conic_isomorphic(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// (r,s/Q) splits over Q_{a,b} iff it is 1 or equals (a,b/Q).
bool quaternion_splits_over_conic(const Rat& r, const Rat& s, const Rat& a, const Rat& b);

/// Number of orderings of Q extending to Q_{a,b}: 1 iff a > 0 or b > 0.
int orderings_extending(const Rat& a, const Rat& b);

/// Element u + v*sqrt(d) of a quadratic field.
struct QuadElem {
    Rat u, v;
};

/// Orderings of Q(sqrt(d)) at which a > 0 or b > 0, counted over the real
/// embeddings (two for d > 0, none for d < 0).
int orderings_extending(const Int& d, const QuadElem& a, const QuadElem& b);

// ---- Witt-inequivalence certificates ----

struct OrderingCountCert {
    int count_first = 0, count_second = 0;
};

struct SplitVsNonsplitCert {
    RamificationSet ram_first, ram_second;
};

/// Witness pairs drawn from {-1,2,-2}^2 whose splitting behaviour over the
/// two conic fields differs, once read under the identity on the alphabet
/// and once under the simultaneous swap 2 <-> -2 (any hyperfield
/// isomorphism fixes -1 and sends 2 to +-2). The witnesses coincide when
/// the (-1,-1) obstruction alone decides.
struct QuaternionObstructionCert {
    std::array<Int, 2> witness_identity, witness_swap;
    RamificationSet ram_witness_identity, ram_witness_swap;
    RamificationSet ram_first, ram_second;
};

struct IndistinguishableCert {};

struct Certificate {
    std::array<Rat, 4> inputs;  // a, b, c, d
    std::variant<OrderingCountCert, SplitVsNonsplitCert, QuaternionObstructionCert, IndistinguishableCert> data;

    std::string kind() const;
    bool indistinguishable() const { return std::holds_alternative<IndistinguishableCert>(data); }
};

/// Applies the sound rules in order (ordering counts, split vs non-split,
/// the (-1,-1) obstruction, the {-1,+-2} splitting-set obstruction) and
/// returns the first success, else Indistinguishable. A non-Indistinguishable
/// certificate proves the fields Witt inequivalent; Indistinguishable
/// proves nothing.
Certificate witt_distinguish(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// Recomputes only the claims stored in the certificate and confirms the
/// rule's hypothesis. Mismatched inputs raise a domain error.
bool verify_certificate(const Certificate& cert, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// One weak-approximation constraint: a sign at the real place or a local
/// square class at a finite prime.
struct LocalCondition {
    Place place;
    int sign = 0;                            // +-1, real place only
    std::optional<PadicSquareClass> cls;     // finite places only

    static LocalCondition sign_at_infinity(int sign);
    static LocalCondition class_at(const Int& p, const Rat& target);
};

/// Smallest-|n| integer meeting every condition, found by scanning the
/// congruence class (mod 8 or 16 at 2, mod p^2 at odd p, CRT-combined) in
/// increasing absolute value; the result is canonicalized to a squarefree
/// integer, which preserves all local classes.
Int weak_approx(const std::vector<LocalCondition>& conditions);

struct WitnessSet {
    std::vector<ConicField> fields;
    // certificates[i][j] holds the pair certificate for i < j.
    std::vector<std::vector<std::optional<Certificate>>> certificates;
};

/// The constructive witness family over Q: at least r+3 = 4 pairwise
/// Witt-inequivalent conic function fields with a fully verified
/// certificate matrix. Failure to certify any pair is a hard error.
WitnessSet witness_set();

} // namespace wittconics
