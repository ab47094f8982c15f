#pragma once

#include "qgs/adversary.hpp"
#include "qgs/gf2.hpp"
#include "qgs/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qgs {

/// Question census against a secret set: counts[M] is the number of
/// questions q whose agreement set {i : f(q) == q.x_i} equals the
/// subset M, encoded as a bitmask with bit i for secret i (0-based).
/// For two secrets this is the classic three-way split: counts[0b01]
/// and counts[0b10] are the choice questions answered for x1 / x2, and
/// counts[0b11] the questions where both secrets force the answer.
struct AgreementCensus {
    int n = 0;
    int k = 0;
    std::vector<std::int64_t> counts;  // size 2^k

    std::int64_t total() const;
};

/// Exact census in one pass over all questions. k is capped at 16 by
/// the bitmask encoding.
AgreementCensus census(const OracleTable& table, std::span<const BitVec> secrets);

/// +1 when secret i (0-based) lies in the agreement subset, else -1.
inline int agreement_sign(int i, std::uint32_t mask) { return mask >> i & 1 ? 1 : -1; }

/// Recovers each secret's amplitude C_{x_i} / N from the census alone:
/// C_{x_i} = sum_M sign(i, M) * S_M. Must agree with the spectrum at
/// the secret indices.
std::vector<Rat> reconstruct_coefficients(const AgreementCensus& c);

/// Raised when an operation requires independent secrets; witness is
/// the bitmask of a nonempty input subset whose XOR vanishes.
struct DependentSecretsError : std::invalid_argument {
    DependentSecretsError(std::uint32_t witness_mask, const std::string& msg)
        : std::invalid_argument(msg), witness(witness_mask) {}
    std::uint32_t witness;
};

/// Number of questions realizing each joint answer pattern
/// v = (q.x_1, ..., q.x_k), indexed by the bitmask with bit i for
/// secret i. For independent secrets every pattern is realized by
/// exactly 2^(n-k) questions; dependent secrets are refused with a
/// witness.
std::vector<std::int64_t> symmetry_counts(std::span<const BitVec> secrets);

/// Closed-form success lower bound for the majority promise with k
/// independent secrets: k / 2^(2(k-1)) * C(k-1, ceil((k-1)/2))^2.
Rat p_k(int k);

/// Success probability of the subgroup adversary whose secrets are the
/// k nonzero elements of a subgroup (k odd, k+1 a power of two):
/// 4k / (k+1)^2.
Rat subgroup_success(int k);

}  // namespace qgs
