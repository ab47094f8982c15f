#pragma once

#include "qgs/adversary.hpp"
#include "qgs/gf2.hpp"
#include "qgs/rational.hpp"
#include "qgs/rng.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qgs {

/// Exact measurement distribution of one algorithm run against a fixed
/// oracle. coeff(j) is the integer C_j = #{q : j.q == f(q)} - #{q :
/// j.q != f(q)}; outcome j has amplitude C_j / N and probability
/// (C_j / N)^2. Construction verifies sum_j C_j^2 == N^2 and that every
/// C_j has the parity of N.
class AmplitudeSpectrum {
  public:
    AmplitudeSpectrum(int dim, std::vector<std::int32_t> coeffs);

    int dim() const { return n_; }
    std::int64_t denominator() const { return std::int64_t{1} << n_; }

    std::int32_t coeff(std::uint32_t j) const { return c_[j]; }
    const std::vector<std::int32_t>& coeffs() const { return c_; }

    Rat amplitude(std::uint32_t j) const;
    Rat probability(std::uint32_t j) const;

    /// Outcomes with nonzero probability, ascending.
    std::vector<BitVec> support() const;

  private:
    int n_;
    std::vector<std::int32_t> c_;
};

/// In-place fast Walsh-Hadamard butterfly over integers; length must be
/// a power of two. Output j is sum_q (-1)^(j.q) * data[q], unnormalized.
void wht_inplace(std::span<std::int32_t> data);

/// The O(N^2) transform straight from the definition. Kept permanently
/// as the correctness oracle for the fast path.
std::vector<std::int64_t> wht_reference(std::span<const std::int32_t> signs);

/// One run of the algorithm against the oracle: Hadamard layer, oracle
/// phase kickback, Hadamard layer. Charges exactly one oracle call and
/// returns the exact output spectrum. The transform is pure integer
/// arithmetic.
AmplitudeSpectrum amplitudes(const OracleTable& table);

/// sum_i (C_{x_i} / N)^2 over the given (distinct) secrets, exact.
Rat success_probability(const AmplitudeSpectrum& spectrum, std::span<const BitVec> secrets);

/// Draws from P(j) = (C_j / N)^2 using exact cumulative integer mass,
/// so probability-zero outcomes can never be emitted.
class DistributionSampler {
  public:
    explicit DistributionSampler(const AmplitudeSpectrum& spectrum);
    BitVec draw(Rng& rng) const;

  private:
    int n_;
    std::uint64_t total_;                                    // N^2
    std::vector<std::pair<std::uint64_t, std::uint32_t>> cum_;  // (cumulative mass, outcome)
};

/// count independent draws, reproducible from the seed.
std::vector<BitVec> sample(const AmplitudeSpectrum& spectrum, std::uint64_t seed,
                           std::size_t count);

}  // namespace qgs
