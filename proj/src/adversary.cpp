#include "qgs/adversary.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace qgs {

namespace {

std::size_t packed_words(int dim) {
    return std::size_t{1} << (dim > 6 ? dim - 6 : 0);
}

void check_table_dim(int n) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("table dimension out of range");
}

struct TableBuilder {
    explicit TableBuilder(int dim) : n(dim), bits(packed_words(dim), 0) {}
    void set(std::uint32_t q, int v) {
        if (v) bits[q >> 6] |= std::uint64_t{1} << (q & 63);
    }
    OracleTable take() { return OracleTable(n, std::move(bits)); }
    int n;
    std::vector<std::uint64_t> bits;
};

void check_distinct(std::span<const BitVec> vs, const char* what) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) throw std::invalid_argument(std::string(what) + ": secrets must be distinct");
}

void check_secret_dims(std::span<const BitVec> vs, int n, const char* what) {
    for (const BitVec& v : vs)
        if (v.dim() != n) throw std::invalid_argument(std::string(what) + ": secret dimension mismatch");
}

}  // namespace

OracleTable::OracleTable(int dim, std::vector<std::uint64_t> packed)
    : n_(dim), bits_(std::move(packed)) {
    check_table_dim(dim);
    if (bits_.size() != packed_words(dim))
        throw std::invalid_argument("packed table has wrong length for dimension " +
                                    std::to_string(dim));
    if (dim < 6) {
        std::uint64_t used = (std::uint64_t{1} << (std::uint64_t{1} << dim)) - 1;
        if (bits_[0] & ~used) throw std::invalid_argument("padding bits beyond 2^n must be zero");
    }
}

OracleTable::OracleTable(const OracleTable& o)
    : n_(o.n_), bits_(o.bits_), calls_(o.calls()) {}

OracleTable& OracleTable::operator=(const OracleTable& o) {
    n_ = o.n_;
    bits_ = o.bits_;
    calls_.store(o.calls(), std::memory_order_relaxed);
    return *this;
}

std::string OracleTable::to_hex() const {
    const std::uint32_t count = size();
    const std::uint32_t digits = (count + 3) / 4;
    std::string out = std::to_string(n_) + ":";
    for (std::uint32_t d = 0; d < digits; ++d) {
        int nibble = 0;
        for (std::uint32_t off = 0; off < 4; ++off) {
            std::uint32_t q = d * 4 + off;
            if (q < count && answer(q)) nibble |= 8 >> off;
        }
        out += "0123456789abcdef"[nibble];
    }
    return out;
}

OracleTable OracleTable::from_hex(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("table text must look like \"<n>:<hex>\"");
    int n = 0;
    for (char c : text.substr(0, colon)) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad dimension header");
        n = n * 10 + (c - '0');
    }
    check_table_dim(n);
    const std::uint32_t count = std::uint32_t{1} << n;
    std::string_view hex = text.substr(colon + 1);
    if (hex.size() != (count + 3) / 4)
        throw std::invalid_argument("expected " + std::to_string((count + 3) / 4) +
                                    " hex digits for dimension " + std::to_string(n));
    TableBuilder b(n);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        char c = hex[d];
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
        else throw std::invalid_argument("bad hex digit in table");
        for (std::uint32_t off = 0; off < 4; ++off) {
            std::uint32_t q = static_cast<std::uint32_t>(d) * 4 + off;
            int v = nibble >> (3 - off) & 1;
            if (q >= count) {
                if (v) throw std::invalid_argument("nonzero padding in table hex");
                continue;
            }
            b.set(q, v);
        }
    }
    return b.take();
}

int spec_dim(const AdversarySpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FullStar>) return s.x1.dim();
            else if constexpr (std::is_same_v<T, Triangle>) return s.x1.dim();
            else if constexpr (std::is_same_v<T, Biased>) return s.x1.dim();
            else if constexpr (std::is_same_v<T, Minority>) return s.x1.dim();
            else if constexpr (std::is_same_v<T, MajorityTable>) {
                if (s.secrets.empty()) throw std::invalid_argument("majority table needs secrets");
                return s.secrets.front().dim();
            } else if constexpr (std::is_same_v<T, SubgroupAdversary>) return s.g.dim();
            else return s.n;
        },
        spec);
}

std::vector<BitVec> spec_secrets(const AdversarySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::vector<BitVec> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FullStar>) return {s.x1};
            else if constexpr (std::is_same_v<T, Triangle>) return {s.x1, s.x2};
            else if constexpr (std::is_same_v<T, Biased>) return {s.x1, s.x2};
            else if constexpr (std::is_same_v<T, Minority>) return {s.x1, s.x2, s.x3};
            else if constexpr (std::is_same_v<T, MajorityTable>) return s.secrets;
            else if constexpr (std::is_same_v<T, SubgroupAdversary>) {
                std::vector<BitVec> out;
                for (const BitVec& v : s.g.elements())
                    if (v.value() != 0) out.push_back(v);
                return out;
            } else return {};
        },
        spec);
}

int spec_min_agree(const AdversarySpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MajorityTable>)
                return (static_cast<int>(s.secrets.size()) + 1) / 2;
            else if constexpr (std::is_same_v<T, SubgroupAdversary>) {
                int k = (1 << s.g.rank()) - 1;
                return (k + 1) / 2;
            } else if constexpr (std::is_same_v<T, RawTable>)
                return 0;
            else
                return 1;
        },
        spec);
}

namespace {

OracleTable compile_full_star(const FullStar& s) {
    TableBuilder b(s.x1.dim());
    const std::uint32_t count = std::uint32_t{1} << s.x1.dim();
    for (std::uint32_t q = 0; q < count; ++q) b.set(q, dot(BitVec(q, b.n), s.x1));
    return b.take();
}

OracleTable compile_triangle(const Triangle& s) {
    const BitVec xs[3] = {s.x1, s.x2, s.xstar};
    check_distinct(xs, "triangle");
    TableBuilder b(s.x1.dim());
    const std::uint32_t count = std::uint32_t{1} << b.n;
    for (std::uint32_t qv = 0; qv < count; ++qv) {
        BitVec q(qv, b.n);
        int a = dot(q, s.x1);
        int v = dot(q, s.x2) == a ? a : dot(q, s.xstar);
        b.set(qv, v);
    }
    return b.take();
}

OracleTable compile_biased(const Biased& s) {
    const BitVec xs[2] = {s.x1, s.x2};
    check_distinct(xs, "biased");
    if (s.bias_den <= 0 || s.bias_num < 0 || s.bias_num > s.bias_den)
        throw std::invalid_argument("bias must be a rational in [0, 1]");
    const int n = s.x1.dim();
    const std::uint32_t count = std::uint32_t{1} << n;
    const std::int64_t choice_count = count / 2;  // exactly half the questions split x1 and x2
    if (choice_count * s.bias_num % s.bias_den != 0)
        throw std::invalid_argument("bias * (N/2) must be an integer (got " +
                                    std::to_string(s.bias_num) + "/" + std::to_string(s.bias_den) +
                                    " of " + std::to_string(choice_count) + ")");
    const std::int64_t favor_x1 = choice_count * s.bias_num / s.bias_den;

    std::vector<std::uint32_t> choice;
    choice.reserve(static_cast<std::size_t>(choice_count));
    TableBuilder b(n);
    for (std::uint32_t qv = 0; qv < count; ++qv) {
        BitVec q(qv, n);
        int a = dot(q, s.x1);
        if (dot(q, s.x2) == a) b.set(qv, a);
        else choice.push_back(qv);
    }
    if (s.rule == BiasRule::Seeded) {
        Rng rng(s.seed);
        // partial Fisher-Yates: the first favor_x1 slots become the x1 picks
        for (std::int64_t i = 0; i < favor_x1; ++i) {
            std::size_t j = static_cast<std::size_t>(i) +
                            static_cast<std::size_t>(rng.below(choice.size() - static_cast<std::size_t>(i)));
            std::swap(choice[static_cast<std::size_t>(i)], choice[j]);
        }
        std::sort(choice.begin() + static_cast<std::ptrdiff_t>(favor_x1), choice.end());
    }
    for (std::size_t i = 0; i < choice.size(); ++i) {
        BitVec q(choice[i], n);
        b.set(choice[i], static_cast<std::int64_t>(i) < favor_x1 ? dot(q, s.x1) : dot(q, s.x2));
    }
    return b.take();
}

OracleTable compile_minority(const Minority& s) {
    const BitVec xs[3] = {s.x1, s.x2, s.x3};
    check_distinct(xs, "minority");
    TableBuilder b(s.x1.dim());
    const std::uint32_t count = std::uint32_t{1} << b.n;
    for (std::uint32_t qv = 0; qv < count; ++qv) {
        BitVec q(qv, b.n);
        b.set(qv, dot(q, s.x1) ^ dot(q, s.x2) ^ dot(q, s.x3));
    }
    return b.take();
}

OracleTable compile_subgroup(const SubgroupAdversary& s) {
    TableBuilder b(s.g.dim());
    const std::uint32_t count = std::uint32_t{1} << b.n;
    const std::vector<BitVec> basis = s.g.basis();
    for (std::uint32_t qv = 0; qv < count; ++qv) {
        BitVec q(qv, b.n);
        int v = 0;
        for (const BitVec& g : basis) v |= dot(q, g);  // 0 iff q annihilates all of G
        b.set(qv, v);
    }
    return b.take();
}

OracleTable compile_majority(const MajorityTable& s) {
    if (s.secrets.empty()) throw std::invalid_argument("majority table needs secrets");
    const int n = s.secrets.front().dim();
    check_secret_dims(s.secrets, n, "majority table");
    check_distinct(s.secrets, "majority table");
    OracleTable table(n, s.answers);
    int need = (static_cast<int>(s.secrets.size()) + 1) / 2;
    if (!promise_holds(table, s.secrets, need))
        throw std::invalid_argument("explicit table violates the majority promise");
    return table;
}

}  // namespace

OracleTable compile(const AdversarySpec& spec) {
    return std::visit(
        [](const auto& s) -> OracleTable {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FullStar>) return compile_full_star(s);
            else if constexpr (std::is_same_v<T, Triangle>) return compile_triangle(s);
            else if constexpr (std::is_same_v<T, Biased>) return compile_biased(s);
            else if constexpr (std::is_same_v<T, Minority>) return compile_minority(s);
            else if constexpr (std::is_same_v<T, MajorityTable>) return compile_majority(s);
            else if constexpr (std::is_same_v<T, SubgroupAdversary>) return compile_subgroup(s);
            else return OracleTable(s.n, s.answers);
        },
        spec);
}

bool promise_holds(const OracleTable& table, std::span<const BitVec> secrets, int min_agree) {
    if (secrets.empty()) throw std::invalid_argument("promise_holds: no secrets");
    check_secret_dims(secrets, table.dim(), "promise_holds");
    if (min_agree > static_cast<int>(secrets.size()))
        throw std::invalid_argument("min_agree exceeds the number of secrets");
    const std::uint32_t count = table.size();
    for (std::uint32_t qv = 0; qv < count; ++qv) {
        BitVec q(qv, table.dim());
        int f = table.answer(qv);
        int agree = 0;
        for (const BitVec& x : secrets) agree += dot(q, x) == f;
        if (agree < min_agree) return false;
    }
    return true;
}

namespace {

// agreement counts with answer 0 / answer 1 for one question
std::pair<int, int> agree_counts(const BitVec& q, std::span<const BitVec> secrets) {
    int zeros = 0;
    for (const BitVec& x : secrets) zeros += dot(q, x) == 0;
    return {zeros, static_cast<int>(secrets.size()) - zeros};
}

}  // namespace

OracleTable random_valid_table(std::span<const BitVec> secrets, int min_agree, Rng& rng) {
    if (secrets.empty()) throw std::invalid_argument("random_valid_table: no secrets");
    if (min_agree < 1 || min_agree > static_cast<int>(secrets.size()))
        throw std::invalid_argument("random_valid_table: min_agree out of range");
    const int n = secrets.front().dim();
    check_secret_dims(secrets, n, "random_valid_table");
    TableBuilder b(n);
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t qv = 0; qv < count; ++qv) {
        auto [c0, c1] = agree_counts(BitVec(qv, n), secrets);
        bool ok0 = c0 >= min_agree, ok1 = c1 >= min_agree;
        if (!ok0 && !ok1)
            throw std::invalid_argument("no valid answer for question " + BitVec(qv, n).to_string());
        b.set(qv, ok0 && ok1 ? rng.bit() : (ok1 ? 1 : 0));
    }
    return b.take();
}

ValidTableEnumerator::ValidTableEnumerator(std::vector<BitVec> secrets, int min_agree) {
    if (secrets.empty()) throw std::invalid_argument("enumerator: no secrets");
    if (min_agree < 1 || min_agree > static_cast<int>(secrets.size()))
        throw std::invalid_argument("enumerator: min_agree out of range");
    n_ = secrets.front().dim();
    check_secret_dims(secrets, n_, "enumerator");
    base_.assign(packed_words(n_), 0);
    const std::uint32_t count = std::uint32_t{1} << n_;
    for (std::uint32_t qv = 0; qv < count; ++qv) {
        auto [c0, c1] = agree_counts(BitVec(qv, n_), secrets);
        bool ok0 = c0 >= min_agree, ok1 = c1 >= min_agree;
        if (ok0 && ok1) free_.push_back(qv);
        else if (ok1) base_[qv >> 6] |= std::uint64_t{1} << (qv & 63);
        else if (!ok0) satisfiable_ = false;
    }
    if (free_.size() > 20)
        throw std::invalid_argument("enumeration too large: 2^" + std::to_string(free_.size()) +
                                    " valid tables exceeds the 2^20 cap");
}

std::uint64_t ValidTableEnumerator::total() const {
    return satisfiable_ ? std::uint64_t{1} << free_.size() : 0;
}

std::optional<OracleTable> ValidTableEnumerator::next() {
    if (cursor_ >= total()) return std::nullopt;
    std::vector<std::uint64_t> bits = base_;
    for (std::size_t i = 0; i < free_.size(); ++i)
        if (cursor_ >> i & 1) bits[free_[i] >> 6] |= std::uint64_t{1} << (free_[i] & 63);
    ++cursor_;
    return OracleTable(n_, std::move(bits));
}

}  // namespace qgs
