#include "qgs/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qgs {

namespace {

void check_dim(int n) {
    if (n < 1 || n > kMaxDim)
        throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxDim) +
                                    "], got " + std::to_string(n));
}

void check_same_dim(const BitVec& a, const BitVec& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
}

}  // namespace

BitVec::BitVec(std::uint32_t bits, int dim) : n_(dim), bits_(bits) {
    check_dim(dim);
    if (dim < 32 && bits >> dim)
        throw std::invalid_argument("bits " + std::to_string(bits) + " out of range for B^" +
                                    std::to_string(dim));
}

std::string BitVec::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (bits_ >> (n_ - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

BitVec BitVec::parse(std::string_view digits) {
    check_dim(static_cast<int>(digits.size()));
    std::uint32_t bits = 0;
    for (char c : digits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bad digit in bit string: " + std::string(digits));
        bits = bits << 1 | static_cast<std::uint32_t>(c - '0');
    }
    return BitVec(bits, static_cast<int>(digits.size()));
}

BitVec BitVec::operator^(const BitVec& o) const {
    check_same_dim(*this, o);
    return BitVec(bits_ ^ o.bits_, n_);
}

int dot(const BitVec& q, const BitVec& x) {
    check_same_dim(q, x);
    return std::popcount(q.value() & x.value()) & 1;
}

std::optional<std::uint32_t> dependency_witness(std::span<const BitVec> vs) {
    if (vs.size() > 32) throw std::invalid_argument("dependency_witness: more than 32 vectors");
    for (std::size_t i = 1; i < vs.size(); ++i) check_same_dim(vs[0], vs[i]);

    // pivot[b] holds a row with leading bit b plus the input subset it
    // came from; a row reduced to zero exposes that subset as a witness.
    std::uint32_t pivot_row[32] = {};
    std::uint32_t pivot_combo[32] = {};
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::uint32_t v = vs[i].value();
        std::uint32_t combo = 1u << i;
        while (v != 0) {
            int b = std::bit_width(v) - 1;
            if (pivot_row[b] == 0) {
                pivot_row[b] = v;
                pivot_combo[b] = combo;
                break;
            }
            v ^= pivot_row[b];
            combo ^= pivot_combo[b];
        }
        if (v == 0) return combo;
    }
    return std::nullopt;
}

bool is_independent(std::span<const BitVec> vs) { return !dependency_witness(vs).has_value(); }

namespace {

// Reduced row echelon form: unique leading bits, each pivot bit cleared
// from every other row, rows sorted by descending pivot.
std::vector<std::uint32_t> echelonize(int dim, std::span<const BitVec> basis) {
    std::vector<std::uint32_t> rows;
    for (const BitVec& v : basis) {
        if (v.dim() != dim)
            throw std::invalid_argument("basis vector dimension " + std::to_string(v.dim()) +
                                        " does not match subspace dimension " +
                                        std::to_string(dim));
        std::uint32_t r = v.value();
        for (std::uint32_t row : rows) {
            std::uint32_t lead = std::uint32_t{1} << (std::bit_width(row) - 1);
            if (r & lead) r ^= row;
        }
        if (r == 0) throw std::invalid_argument("subspace basis is linearly dependent");
        rows.push_back(r);
    }
    // back-substitute so pivots appear in exactly one row each
    std::sort(rows.begin(), rows.end(), std::greater<>());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint32_t lead = std::uint32_t{1} << (std::bit_width(rows[i]) - 1);
        for (std::size_t j = 0; j < i; ++j)
            if (rows[j] & lead) rows[j] ^= rows[i];
    }
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return rows;
}

}  // namespace

Subspace::Subspace(int dim, std::span<const BitVec> basis)
    : n_(dim), rows_(echelonize(dim, basis)) {
    check_dim(dim);
}

Subspace::Subspace(int dim, std::vector<std::uint32_t> echelon)
    : n_(dim), rows_(std::move(echelon)) {}

Subspace Subspace::zero(int dim) {
    check_dim(dim);
    return Subspace(dim, std::vector<std::uint32_t>{});
}

Subspace Subspace::full(int dim) {
    check_dim(dim);
    std::vector<std::uint32_t> rows;
    for (int b = dim - 1; b >= 0; --b) rows.push_back(std::uint32_t{1} << b);
    return Subspace(dim, std::move(rows));
}

bool Subspace::contains(const BitVec& v) const {
    if (v.dim() != n_) throw std::invalid_argument("contains: dimension mismatch");
    std::uint32_t r = v.value();
    for (std::uint32_t row : rows_) {
        std::uint32_t lead = std::uint32_t{1} << (std::bit_width(row) - 1);
        if (r & lead) r ^= row;
    }
    return r == 0;
}

std::vector<BitVec> Subspace::elements() const {
    std::vector<std::uint32_t> vals{0};
    vals.reserve(std::size_t{1} << rows_.size());
    for (std::uint32_t row : rows_) {
        std::size_t count = vals.size();
        for (std::size_t i = 0; i < count; ++i) vals.push_back(vals[i] ^ row);
    }
    std::sort(vals.begin(), vals.end());
    std::vector<BitVec> out;
    out.reserve(vals.size());
    for (std::uint32_t v : vals) out.emplace_back(v, n_);
    return out;
}

std::vector<BitVec> Subspace::basis() const {
    std::vector<BitVec> out;
    out.reserve(rows_.size());
    for (std::uint32_t r : rows_) out.emplace_back(r, n_);
    return out;
}

Subspace orthocomplement(const Subspace& g) {
    const int n = g.dim();
    std::uint32_t pivot_mask = 0;
    for (const BitVec& row : g.basis())
        pivot_mask |= std::uint32_t{1} << (std::bit_width(row.value()) - 1);

    // One generator per free bit f: set f, plus each row's pivot bit
    // whenever that row has bit f. Orthogonality to every row follows
    // because echelon rows carry no pivot bit but their own.
    std::vector<std::uint32_t> gens;
    for (int f = n - 1; f >= 0; --f) {
        std::uint32_t fbit = std::uint32_t{1} << f;
        if (pivot_mask & fbit) continue;
        std::uint32_t q = fbit;
        for (const BitVec& row : g.basis())
            if (row.value() & fbit)
                q |= std::uint32_t{1} << (std::bit_width(row.value()) - 1);
        gens.push_back(q);
    }
    std::vector<BitVec> basis;
    basis.reserve(gens.size());
    for (std::uint32_t v : gens) basis.emplace_back(v, n);
    return Subspace(n, basis);
}

std::optional<BitVec> separating_question(const BitVec& x1, const BitVec& x2, const BitVec& x3,
                                          const BitVec& x4) {
    check_same_dim(x1, x2);
    check_same_dim(x1, x3);
    check_same_dim(x1, x4);
    const BitVec* xs[4] = {&x1, &x2, &x3, &x4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*xs[i] == *xs[j])
                throw std::invalid_argument("separating_question: inputs must be distinct");

    const std::uint32_t count = std::uint32_t{1} << x1.dim();
    for (std::uint32_t qv = 0; qv < count; ++qv) {
        BitVec q(qv, x1.dim());
        int a = dot(q, x1);
        if (dot(q, x2) != a) continue;
        int b = dot(q, x3);
        if (dot(q, x4) != b || a == b) continue;
        return q;
    }
    return std::nullopt;
}

}  // namespace qgs
