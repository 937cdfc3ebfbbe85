#pragma once

#include "wittconics/numeric.hpp"

namespace wittconics {

/// Q(sqrt(d)) for squarefree d not in {0, 1}.
struct QuadraticField {
    Int d;

    static QuadraticField of(const Int& d);
};

/// d when d = 1 mod 4, else 4d.
Int discriminant_of(const Int& d);

/// Number of prime integers ramifying in Q(sqrt(d)), i.e. the number of
/// prime divisors of the discriminant.
int ramified_count(const Int& d);

/// For squarefree d > 0: true iff no prime = 3 mod 4 divides d.
bool is_sum_two_squares(const Int& d);

/// 2-rank of the ideal class group of Q(sqrt(d)): N-2 when d > 0 and d is
/// not a sum of two squares, N-1 otherwise.
int class_group_2rank(const Int& d);

struct BinaryQuadraticForm {
    Int a, b, c;
    bool operator==(const BinaryQuadraticForm&) const = default;
};

/// Class group of an imaginary quadratic field computed independently by
/// enumerating reduced primitive forms of the field discriminant; the
/// 2-rank counts the self-inverse reduced forms.
struct ClassGroupData {
    Int order;
    int two_rank = 0;
    std::vector<BinaryQuadraticForm> representatives;
};

ClassGroupData imaginary_class_group_oracle(const Int& d, const Int& max_abs_d = 1000000);

/// 2-rank of V_k / k^{*2}: r1 + r2 + t with (r1, r2) = (2, 0) for d > 0,
/// (0, 1) for d < 0, and t the class-group 2-rank.
int vk_2rank(const Int& d);

/// d_j = product of the first j primes = 1 mod 4, giving class-group
/// 2-ranks 0, 1, ..., count-1.
std::vector<Int> distinct_2rank_family(int count);

/// True (proved Witt inequivalent rational function fields) when the
/// class-group 2-ranks differ or the real-embedding counts differ; false
/// means unknown, not equivalent.
bool rational_function_field_inequiv(const Int& d1, const Int& d2);

/// Committed validation row for a real quadratic field: wide class number
/// and its 2-rank from standard tables, plus the fundamental unit norm
/// (norm +1 marks narrow != wide).
struct RealQuadraticEntry {
    long long d;
    long long class_number;
    int two_rank;
    int unit_norm;
};

const std::vector<RealQuadraticEntry>& real_quadratic_validation_table();

} // namespace wittconics
