#include "qgs/dj.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qgs {

AmplitudeSpectrum::AmplitudeSpectrum(int dim, std::vector<std::int32_t> coeffs)
    : n_(dim), c_(std::move(coeffs)) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("spectrum dimension out of range");
    const std::int64_t n_points = std::int64_t{1} << dim;
    if (static_cast<std::int64_t>(c_.size()) != n_points)
        throw std::invalid_argument("spectrum needs exactly 2^n coefficients");
    unsigned __int128 sum_sq = 0;
    for (std::int32_t c : c_) {
        if (std::abs(static_cast<std::int64_t>(c)) > n_points || ((c ^ n_points) & 1))
            throw std::invalid_argument("coefficient " + std::to_string(c) +
                                        " violates |C_j| <= N, C_j == N (mod 2)");
        sum_sq += static_cast<unsigned __int128>(static_cast<std::int64_t>(c) *
                                                 static_cast<std::int64_t>(c));
    }
    if (sum_sq != static_cast<unsigned __int128>(n_points) * static_cast<unsigned __int128>(n_points))
        throw std::invalid_argument("coefficients violate sum C_j^2 == N^2");
}

Rat AmplitudeSpectrum::amplitude(std::uint32_t j) const {
    return Rat(c_[j], denominator());
}

Rat AmplitudeSpectrum::probability(std::uint32_t j) const {
    std::int64_t c = c_[j];
    return Rat(c * c, denominator() * denominator());
}

std::vector<BitVec> AmplitudeSpectrum::support() const {
    std::vector<BitVec> out;
    for (std::uint32_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) out.emplace_back(j, n_);
    return out;
}

void wht_inplace(std::span<std::int32_t> data) {
    const std::size_t count = data.size();
    if (count == 0 || (count & (count - 1)) != 0)
        throw std::invalid_argument("transform length must be a power of two");
    for (std::size_t len = 1; len < count; len <<= 1)
        for (std::size_t base = 0; base < count; base += len << 1)
            for (std::size_t j = base; j < base + len; ++j) {
                std::int32_t u = data[j];
                std::int32_t v = data[j + len];
                data[j] = u + v;
                data[j + len] = u - v;
            }
}

std::vector<std::int64_t> wht_reference(std::span<const std::int32_t> signs) {
    const std::size_t count = signs.size();
    if (count == 0 || (count & (count - 1)) != 0)
        throw std::invalid_argument("transform length must be a power of two");
    std::vector<std::int64_t> out(count, 0);
    for (std::size_t j = 0; j < count; ++j) {
        std::int64_t acc = 0;
        for (std::size_t q = 0; q < count; ++q)
            acc += (std::popcount(j & q) & 1) ? -signs[q] : signs[q];
        out[j] = acc;
    }
    return out;
}

AmplitudeSpectrum amplitudes(const OracleTable& table) {
    table.record_call();
    const std::uint32_t count = table.size();
    std::vector<std::int32_t> c(count);
    for (std::uint32_t q = 0; q < count; ++q) c[q] = 1 - 2 * table.answer(q);
    wht_inplace(c);
    return AmplitudeSpectrum(table.dim(), std::move(c));
}

Rat success_probability(const AmplitudeSpectrum& spectrum, std::span<const BitVec> secrets) {
    std::int64_t sum_sq = 0;
    for (std::size_t i = 0; i < secrets.size(); ++i) {
        if (secrets[i].dim() != spectrum.dim())
            throw std::invalid_argument("secret dimension does not match spectrum");
        for (std::size_t j = i + 1; j < secrets.size(); ++j)
            if (secrets[i] == secrets[j])
                throw std::invalid_argument("success_probability: secrets must be distinct");
        std::int64_t c = spectrum.coeff(secrets[i].value());
        sum_sq += c * c;
    }
    return Rat(sum_sq, spectrum.denominator() * spectrum.denominator());
}

DistributionSampler::DistributionSampler(const AmplitudeSpectrum& spectrum)
    : n_(spectrum.dim()) {
    const std::uint64_t den = static_cast<std::uint64_t>(spectrum.denominator());
    total_ = den * den;
    std::uint64_t running = 0;
    for (std::uint32_t j = 0; j < spectrum.coeffs().size(); ++j) {
        std::int64_t c = spectrum.coeff(j);
        if (c == 0) continue;
        running += static_cast<std::uint64_t>(c * c);
        cum_.emplace_back(running, j);
    }
}

BitVec DistributionSampler::draw(Rng& rng) const {
    const std::uint64_t u = rng.below(total_);
    auto it = std::upper_bound(cum_.begin(), cum_.end(), u,
                               [](std::uint64_t v, const auto& e) { return v < e.first; });
    return BitVec(it->second, n_);
}

std::vector<BitVec> sample(const AmplitudeSpectrum& spectrum, std::uint64_t seed,
                           std::size_t count) {
    DistributionSampler sampler(spectrum);
    Rng rng(seed);
    std::vector<BitVec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.draw(rng));
    return out;
}

}  // namespace qgs
