#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgs {

/// Hard cap on the dimension. Exact truth tables are 2^n bits, so 24
/// keeps every exhaustive operation within desk-scale memory and time.
inline constexpr int kMaxDim = 24;

/// An element of B^n, the space of n-bit vectors over GF(2), with
/// 1 <= n <= 24. Objects, questions and secrets all live here.
///
/// Digit convention: the string form writes q1 q2 ... qn left to right,
/// and value() == sum q_i * 2^(n-i), i.e. q1 is the most significant
/// bit. Questions and objects use the same convention.
class BitVec {
  public:
    BitVec(std::uint32_t bits, int dim);

    int dim() const { return n_; }
    std::uint32_t value() const { return bits_; }

    std::string to_string() const;
    static BitVec parse(std::string_view digits);

    BitVec operator^(const BitVec& o) const;

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec&, const BitVec&) = default;

  private:
    int n_;
    std::uint32_t bits_;
};

/// Inner product mod 2: parity of the bitwise AND.
int dot(const BitVec& q, const BitVec& x);

/// Linear independence over GF(2), by Gaussian elimination.
/// The empty list is independent by convention.
bool is_independent(std::span<const BitVec> vs);

/// If the vectors are dependent, the bitmask of input positions whose
/// XOR vanishes (a nonempty dependent subset); nullopt when independent.
/// Accepts at most 32 vectors.
std::optional<std::uint32_t> dependency_witness(std::span<const BitVec> vs);

/// A linear subspace of B^n held as a reduced-echelon basis. The basis
/// handed to the constructor must be independent; the canonical echelon
/// form makes equality testing span equality.
class Subspace {
  public:
    Subspace(int dim, std::span<const BitVec> basis);

    static Subspace zero(int dim);
    static Subspace full(int dim);

    int dim() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    bool contains(const BitVec& v) const;

    /// All 2^rank members, ascending by value.
    std::vector<BitVec> elements() const;

    /// Echelon basis rows (descending pivot), empty for the zero space.
    std::vector<BitVec> basis() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

  private:
    Subspace(int dim, std::vector<std::uint32_t> echelon);

    int n_;
    std::vector<std::uint32_t> rows_;  // reduced row echelon, descending pivots
};

/// The annihilator {q : q.x == 0 for all x in g}, of dimension n - rank.
Subspace orthocomplement(const Subspace& g);

/// Smallest q (ascending search) with q.x1 == q.x2 != q.x3 == q.x4, or
/// nullopt when no such question exists. Inputs must be four distinct
/// vectors of one dimension.
std::optional<BitVec> separating_question(const BitVec& x1, const BitVec& x2,
                                          const BitVec& x3, const BitVec& x4);

}  // namespace qgs
