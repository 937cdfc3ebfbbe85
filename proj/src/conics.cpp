#include "wittconics/conics.hpp"

#include <algorithm>

namespace wittconics {

ConicField ConicField::over_q(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw std::domain_error("conic field: a and b must be non-zero");
    return ConicField{square_class(a), square_class(b)};
}

bool splits(const Rat& a, const Rat& b) {
    return quaternion_ramification(a, b).empty();
}

Int holzer_point_bound(const Rat& a, const Rat& b) {
    Int ca = square_class(a).core, cb = square_class(b).core;
    Int m = ca > cb ? ca : cb;
    return 16 * m * m;
}

namespace {

// Exact square root of a rational that is a perfect square.
Rat exact_sqrt(const Rat& r) {
    auto n = perfect_square_root(numerator(r));
    auto d = perfect_square_root(denominator(r));
    if (!n || !d) throw std::logic_error("exact_sqrt: not a perfect square");
    return Rat(*n, *d);
}

bool point_fits(const RationalPoint& pt, const Int& bound) {
    auto ok = [&](const Rat& t) {
        return boost::multiprecision::abs(numerator(t)) <= bound && denominator(t) <= bound;
    };
    return ok(pt.x) && ok(pt.y);
}

} // namespace

std::optional<RationalPoint> find_rational_point(const Rat& a, const Rat& b, const Int& bound) {
    if (a == 0 || b == 0) throw std::domain_error("find_rational_point: a and b must be non-zero");
    if (bound <= 0) throw std::domain_error("find_rational_point: bound must be positive");

    // Scale to the squarefree pair (A, B): a = A ta^2, b = B tb^2, so a
    // point (X, Y) on A X^2 + B Y^2 = 1 gives (X/ta, Y/tb).
    SquareClassQ A_cls = square_class(a), B_cls = square_class(b);
    Int A = A_cls.value(), B = B_cls.value();
    Rat ta = exact_sqrt(a / Rat(A)), tb = exact_sqrt(b / Rat(B));

    auto emit = [&](const Rat& X, const Rat& Y) -> std::optional<RationalPoint> {
        RationalPoint pt{X / ta, Y / tb};
        if (a * pt.x * pt.x + b * pt.y * pt.y != 1) throw std::logic_error("find_rational_point: invariant violated");
        if (!point_fits(pt, bound)) return std::nullopt;
        return pt;
    };

    if (A < 0 && B < 0) return std::nullopt;  // no real point

    if (A == -B) {
        // The binary form is isotropic, so the Holzer box below may only
        // contain projective solutions with u = 0; use the closed form.
        if (auto pt = emit(Rat(A + 1) / Rat(2 * A), Rat(A - 1) / Rat(2 * A))) return pt;
    }

    // Projective search A z^2 + B w^2 = u^2 inside the Holzer box: a
    // solvable equation has a solution with |z| <= sqrt|B|, |w| <= sqrt|A|,
    // |u| <= sqrt|AB|, so an empty box proves no point exists at all.
    const Int abs_ab = boost::multiprecision::abs(A * B);
    const Int u_max = isqrt(abs_ab) + 2;
    const Int z_max = isqrt(boost::multiprecision::abs(B)) + 2;
    bool exists = (A == -B);
    for (Int u = 1; u <= u_max; ++u) {
        for (Int z = z_max; z >= 0; --z) {
            Int rem = u * u - A * z * z;
            if (rem % B != 0) continue;
            auto w = perfect_square_root(rem / B);
            if (!w) continue;
            exists = true;
            if (auto pt = emit(Rat(z, u), Rat(*w, u))) return pt;
        }
    }
    if (!exists) return std::nullopt;

    // A point exists but none in the box met the requested bound; fall
    // back to exhaustive enumeration capped at 10^4.
    const Int cap = 10000;
    const Int u_cap = bound * bound < cap ? bound * bound : cap;
    const Int z_cap = bound < cap ? bound : cap;
    for (Int u = 1; u <= u_cap; ++u) {
        for (Int z = 0; z <= z_cap; ++z) {
            Int rem = u * u - A * z * z;
            if (rem % B != 0) continue;
            auto w = perfect_square_root(rem / B);
            if (!w) continue;
            if (auto pt = emit(Rat(z, u), Rat(*w, u))) return pt;
        }
    }
    return std::nullopt;
}

ConicParametrization parametrize(const Rat& a, const Rat& b, const RationalPoint& p0) {
    if (a == 0 || b == 0) throw std::domain_error("parametrize: a and b must be non-zero");
    const Rat &p = p0.x, &q = p0.y;
    if (a * p * p + b * q * q != 1) throw std::domain_error("parametrize: p0 is not on the conic");

    ConicParametrization out;
    if (q != 0) {
        // Chord of slope z through p0: z = (y - q)/(x - p).
        out.x_num = {-a * p, -2 * b * q, b * p};
        out.y_num = {a * q, -2 * a * p, -b * q};
        out.den = {a, Rat(0), b};
    } else {
        // Tangent at p0 is vertical; swap the roles of x and y.
        out.y_num = {Rat(0), -2 * a * p};
        out.x_num = {b * p, Rat(0), -a * p};
        out.den = {b, Rat(0), a};
    }
    PolyQ lhs = poly_add(poly_scale(poly_mul(out.x_num, out.x_num), a), poly_scale(poly_mul(out.y_num, out.y_num), b));
    if (!poly_is_zero(poly_sub(lhs, poly_mul(out.den, out.den))))
        throw std::logic_error("parametrize: identity check failed");
    return out;
}

bool conic_isomorphic(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return quaternion_ramification(a, b) == quaternion_ramification(c, d);
}

bool quaternion_splits_over_conic(const Rat& r, const Rat& s, const Rat& a, const Rat& b) {
    RamificationSet rs = quaternion_ramification(r, s);
    return rs.empty() || rs == quaternion_ramification(a, b);
}

int orderings_extending(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw std::domain_error("orderings_extending: a and b must be non-zero");
    return (a > 0 || b > 0) ? 1 : 0;
}

namespace {

// Sign of u + v*sqrt(d) at the embedding sending sqrt(d) to +-sqrt(d), d > 0.
int sign_at_embedding(const QuadElem& x, const Int& d, bool positive_root) {
    Rat u = x.u, v = positive_root ? x.v : -x.v;
    if (v == 0) return u > 0 ? 1 : u < 0 ? -1 : 0;
    if (u == 0) return v > 0 ? 1 : -1;
    if (u > 0 && v > 0) return 1;
    if (u < 0 && v < 0) return -1;
    // Mixed signs: compare u^2 with d v^2.
    bool u_wins = u * u > Rat(d) * v * v;
    return u_wins ? (u > 0 ? 1 : -1) : (v > 0 ? 1 : -1);
}

} // namespace

int orderings_extending(const Int& d, const QuadElem& a, const QuadElem& b) {
    if (!is_squarefree(d) || d == 1) throw std::domain_error("orderings_extending: d must be squarefree, not 0 or 1");
    auto is_zero = [](const QuadElem& x) { return x.u == 0 && x.v == 0; };
    if (is_zero(a) || is_zero(b)) throw std::domain_error("orderings_extending: a and b must be non-zero");
    if (d < 0) return 0;
    int count = 0;
    for (bool root : {true, false})
        if (sign_at_embedding(a, d, root) > 0 || sign_at_embedding(b, d, root) > 0) ++count;
    return count;
}

std::string Certificate::kind() const {
    struct Visitor {
        std::string operator()(const OrderingCountCert&) const { return "ordering_count"; }
        std::string operator()(const SplitVsNonsplitCert&) const { return "split_vs_nonsplit"; }
        std::string operator()(const QuaternionObstructionCert&) const { return "quaternion_obstruction"; }
        std::string operator()(const IndistinguishableCert&) const { return "indistinguishable"; }
    };
    return std::visit(Visitor{}, data);
}

namespace {

const std::array<Int, 3> kWitnessAlphabet = {Int(-1), Int(2), Int(-2)};

Int swap_two(const Int& x) {
    if (x == 2) return Int(-2);
    if (x == -2) return Int(2);
    return x;
}

bool splits_over(const std::array<Int, 2>& w, const RamificationSet& ram_field) {
    RamificationSet rw = quaternion_ramification(Rat(w[0]), Rat(w[1]));
    return rw.empty() || rw == ram_field;
}

} // namespace

Certificate witt_distinguish(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    Certificate cert;
    cert.inputs = {a, b, c, d};

    // R1: ordering counts.
    int n1 = orderings_extending(a, b);
    int n2 = orderings_extending(c, d);
    if (n1 != n2) {
        cert.data = OrderingCountCert{n1, n2};
        return cert;
    }

    RamificationSet ram1 = quaternion_ramification(a, b);
    RamificationSet ram2 = quaternion_ramification(c, d);

    // R2: exactly one field is purely transcendental.
    if (ram1.empty() != ram2.empty()) {
        cert.data = SplitVsNonsplitCert{ram1, ram2};
        return cert;
    }

    // R3 and R4: splitting of {-1,+-2}^2 quaternions over the two fields,
    // compared under the identity and under the swap 2 <-> -2.
    std::vector<std::array<Int, 2>> diff_identity, diff_swap;
    for (const Int& r : kWitnessAlphabet) {
        for (const Int& s : kWitnessAlphabet) {
            std::array<Int, 2> w{r, s};
            bool s1 = splits_over(w, ram1);
            if (s1 != splits_over(w, ram2)) diff_identity.push_back(w);
            std::array<Int, 2> sw{swap_two(r), swap_two(s)};
            if (s1 != splits_over(sw, ram2)) diff_swap.push_back(w);
        }
    }
    if (!diff_identity.empty() && !diff_swap.empty()) {
        // Prefer the swap-invariant (-1,-1) witness when it decides both.
        std::array<Int, 2> minus{Int(-1), Int(-1)};
        bool minus_decides = std::count(diff_identity.begin(), diff_identity.end(), minus) > 0;
        std::array<Int, 2> w_id = minus_decides ? minus : diff_identity.front();
        std::array<Int, 2> w_sw = minus_decides ? minus : diff_swap.front();
        cert.data = QuaternionObstructionCert{
            w_id, w_sw, quaternion_ramification(Rat(w_id[0]), Rat(w_id[1])),
            quaternion_ramification(Rat(w_sw[0]), Rat(w_sw[1])), ram1, ram2};
        return cert;
    }

    cert.data = IndistinguishableCert{};
    return cert;
}

bool verify_certificate(const Certificate& cert, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    for (std::size_t i = 0; i < 4; ++i) {
        const Rat& claimed = cert.inputs[i];
        const Rat& given = i == 0 ? a : i == 1 ? b : i == 2 ? c : d;
        if (square_class(claimed) != square_class(given))
            throw std::domain_error("verify_certificate: mismatched field descriptors");
    }
    struct Visitor {
        const Rat &a, &b, &c, &d;
        bool operator()(const IndistinguishableCert&) const { return true; }  // no claim
        bool operator()(const OrderingCountCert& oc) const {
            return oc.count_first == orderings_extending(a, b) && oc.count_second == orderings_extending(c, d) &&
                   oc.count_first != oc.count_second;
        }
        bool operator()(const SplitVsNonsplitCert& sn) const {
            return sn.ram_first == quaternion_ramification(a, b) && sn.ram_second == quaternion_ramification(c, d) &&
                   (sn.ram_first.empty() != sn.ram_second.empty());
        }
        bool operator()(const QuaternionObstructionCert& qo) const {
            auto in_alphabet = [](const Int& x) { return x == -1 || x == 2 || x == -2; };
            for (const auto& w : {qo.witness_identity, qo.witness_swap})
                if (!in_alphabet(w[0]) || !in_alphabet(w[1])) return false;
            if (qo.ram_first != quaternion_ramification(a, b)) return false;
            if (qo.ram_second != quaternion_ramification(c, d)) return false;
            if (qo.ram_witness_identity != quaternion_ramification(Rat(qo.witness_identity[0]), Rat(qo.witness_identity[1])))
                return false;
            if (qo.ram_witness_swap != quaternion_ramification(Rat(qo.witness_swap[0]), Rat(qo.witness_swap[1])))
                return false;
            auto splits_with = [](const RamificationSet& rw, const RamificationSet& rf) {
                return rw.empty() || rw == rf;
            };
            bool id_differs = splits_with(qo.ram_witness_identity, qo.ram_first) !=
                              splits_with(qo.ram_witness_identity, qo.ram_second);
            std::array<Int, 2> swapped{swap_two(qo.witness_swap[0]), swap_two(qo.witness_swap[1])};
            bool swap_differs = splits_with(qo.ram_witness_swap, qo.ram_first) !=
                                splits_with(quaternion_ramification(Rat(swapped[0]), Rat(swapped[1])), qo.ram_second);
            return id_differs && swap_differs;
        }
    };
    return std::visit(Visitor{a, b, c, d}, cert.data);
}

LocalCondition LocalCondition::sign_at_infinity(int sign) {
    if (sign != 1 && sign != -1) throw std::domain_error("weak_approx: sign must be +-1");
    LocalCondition c;
    c.place = Place::at_infinity();
    c.sign = sign;
    return c;
}

LocalCondition LocalCondition::class_at(const Int& p, const Rat& target) {
    LocalCondition c;
    c.place = Place::finite(p);
    c.cls = padic_square_class(target, p);
    return c;
}

Int weak_approx(const std::vector<LocalCondition>& conditions) {
    int sign_wanted = 0;
    Int modulus = 1, residue = 0;
    std::vector<Place> seen;
    for (const auto& cond : conditions) {
        if (std::count(seen.begin(), seen.end(), cond.place) > 0)
            throw std::domain_error("weak_approx: contradictory conditions at one place");
        seen.push_back(cond.place);
        if (cond.place.infinite) {
            if (cond.sign != 1 && cond.sign != -1) throw std::domain_error("weak_approx: malformed sign condition");
            sign_wanted = cond.sign;
            continue;
        }
        if (!cond.cls || cond.cls->p != cond.place.p) throw std::domain_error("weak_approx: malformed class condition");
        const Int& p = cond.place.p;
        // n = rep mod p^2 pins the class at odd p; at 2, mod 8 suffices
        // for unit representatives and mod 16 for the even ones.
        Int m = p == 2 ? (cond.cls->rep % 2 == 0 ? Int(16) : Int(8)) : p * p;
        Int r = math_mod(cond.cls->rep, m);
        // CRT: x = residue (mod modulus), x = r (mod m); moduli are coprime.
        Int k = math_mod((r - residue) * mod_inverse(modulus, m), m);
        residue += modulus * k;
        modulus *= m;
    }
    residue = math_mod(residue, modulus);
    // Walk the congruence class by increasing |n| (positive first on ties).
    Int next_pos = residue > 0 ? residue : residue + modulus;
    Int next_neg = residue - modulus;  // residue is in [0, modulus)
    for (;;) {
        Int n;
        if (-next_neg < next_pos) {
            n = next_neg;
            next_neg -= modulus;
        } else {
            n = next_pos;
            next_pos += modulus;
        }
        if (sign_wanted != 0 && ((n > 0) != (sign_wanted > 0))) continue;
        SquareClassQ cls = square_class(Rat(n));
        for (const auto& cond : conditions)  // the congruences are sufficient; recheck anyway
            if (!cond.place.infinite && padic_square_class(Rat(cls.value()), cond.place.p) != *cond.cls)
                throw std::logic_error("weak_approx: congruence failed to pin the class");
        return cls.value();
    }
}

WitnessSet witness_set() {
    // a_0 = -1 and a_1 = 1, with the second coefficient fixed at -1.
    std::vector<Rat> coefficients{Rat(-1), Rat(1)};

    auto smallest_finite_ramified = [](const Rat& x, const std::optional<Int>& avoid) -> Int {
        for (const Place& v : quaternion_ramification(x, Rat(-1)).places)
            if (!v.infinite && (!avoid || v.p != *avoid)) return v.p;
        throw std::logic_error("witness_set: expected a finite ramified prime");
    };

    Int frak_p = smallest_finite_ramified(Rat(-1), std::nullopt);  // ramified prime of (-1,-1)
    Int abar = weak_approx({LocalCondition::class_at(frak_p, Rat(1)), LocalCondition::sign_at_infinity(-1)});
    Int frak_q = smallest_finite_ramified(Rat(abar), frak_p);
    Int b1 = weak_approx({LocalCondition::sign_at_infinity(1), LocalCondition::class_at(frak_p, Rat(-1))});
    Int b0 = weak_approx({LocalCondition::sign_at_infinity(-1), LocalCondition::class_at(frak_p, Rat(-1)),
                          LocalCondition::class_at(frak_q, Rat(-abar))});
    coefficients.emplace_back(b1);
    coefficients.emplace_back(b0);

    WitnessSet out;
    for (const Rat& t : coefficients) out.fields.push_back(ConicField::over_q(t, Rat(-1)));
    const std::size_t n = out.fields.size();
    out.certificates.assign(n, std::vector<std::optional<Certificate>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Certificate cert = witt_distinguish(coefficients[i], Rat(-1), coefficients[j], Rat(-1));
            if (cert.indistinguishable() || !verify_certificate(cert, coefficients[i], Rat(-1), coefficients[j], Rat(-1)))
                throw std::logic_error("witness_set: failed to certify a pair");
            out.certificates[i][j] = std::move(cert);
        }
    }
    return out;
}

} // namespace wittconics
