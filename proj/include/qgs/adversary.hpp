#pragma once

#include "qgs/gf2.hpp"
#include "qgs/rng.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qgs {

/// The adversary's fixed answer table A_q for all N = 2^n questions,
/// bit-packed. Immutable after construction except for the call
/// counter, which charges one unit per algorithm run (record_call) or
/// per classical question (query); answer() is free inspection for
/// analysis code and tests.
class OracleTable {
  public:
    OracleTable(int dim, std::vector<std::uint64_t> packed);

    OracleTable(const OracleTable& o);
    OracleTable& operator=(const OracleTable& o);

    int dim() const { return n_; }
    std::uint32_t size() const { return std::uint32_t{1} << n_; }

    int answer(std::uint32_t q) const {
        return static_cast<int>(bits_[q >> 6] >> (q & 63)) & 1;
    }
    int query(std::uint32_t q) const {
        record_call();
        return answer(q);
    }

    void record_call() const { calls_.fetch_add(1, std::memory_order_relaxed); }
    std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

    /// "<n>:<hex>", ceil(N/4) lowercase digits. Digit i covers
    /// questions 4i..4i+3 with question 4i in the nibble's 8s place.
    std::string to_hex() const;
    static OracleTable from_hex(std::string_view text);

    friend bool operator==(const OracleTable& a, const OracleTable& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;  // counters excluded
    }

  private:
    int n_;
    std::vector<std::uint64_t> bits_;
    mutable std::atomic<std::uint64_t> calls_{0};
};

// ---------------------------------------------------------------------------
// Declarative adversary strategies. compile() turns each into a table.

/// Answers every question on behalf of x1.
struct FullStar {
    BitVec x1;
};

/// Answers for xstar whenever x1 and x2 disagree, making the four-point
/// support {x1, x2, xstar, x1^x2^xstar}.
struct Triangle {
    BitVec x1, x2, xstar;
};

enum class BiasRule {
    Ascending,  // the first bias*(N/2) choice questions, in ascending q
    Seeded,     // a random subset of that exact size
};

/// On the N/2 choice questions (q.x1 != q.x2), answers for x1 exactly
/// bias_num/bias_den of the time. The count bias*(N/2) must be an
/// integer.
struct Biased {
    BitVec x1, x2;
    std::int64_t bias_num = 1;
    std::int64_t bias_den = 1;
    BiasRule rule = BiasRule::Ascending;
    std::uint64_t seed = 0;
};

/// f(q) = q.x1 ^ q.x2 ^ q.x3 — always answers with the minority view.
struct Minority {
    BitVec x1, x2, x3;
};

/// An explicit answer table together with its secret set; construction
/// validates the majority promise (every answer agrees with at least
/// ceil(k/2) secrets).
struct MajorityTable {
    std::vector<BitVec> secrets;
    std::vector<std::uint64_t> answers;  // packed like OracleTable
};

/// f(q) = 0 exactly when q annihilates the subgroup; the secrets are
/// the nonzero elements of g.
struct SubgroupAdversary {
    Subspace g;
};

/// Verbatim answer bits, no promise attached.
struct RawTable {
    int n = 0;
    std::vector<std::uint64_t> answers;
};

using AdversarySpec =
    std::variant<FullStar, Triangle, Biased, Minority, MajorityTable, SubgroupAdversary, RawTable>;

int spec_dim(const AdversarySpec& spec);

/// The secret set the strategy commits to ({} for RawTable; the
/// subgroup's nonzero elements for SubgroupAdversary).
std::vector<BitVec> spec_secrets(const AdversarySpec& spec);

/// Promise threshold the variant is held to: 1 for the guessing-secrets
/// strategies, ceil(k/2) for majority-style ones, 0 for RawTable.
int spec_min_agree(const AdversarySpec& spec);

OracleTable compile(const AdversarySpec& spec);

/// True iff every answer agrees with at least min_agree secrets.
bool promise_holds(const OracleTable& table, std::span<const BitVec> secrets, int min_agree);

/// A uniformly random valid table: each question's answer is drawn
/// uniformly among those agreeing with at least min_agree secrets.
/// Throws if some question has no valid answer.
OracleTable random_valid_table(std::span<const BitVec> secrets, int min_agree, Rng& rng);

/// Streams every table satisfying the promise exactly once, in
/// ascending order of the free-question choice word. Construction
/// throws when the count of free questions c has 2^c > 2^20.
class ValidTableEnumerator {
  public:
    ValidTableEnumerator(std::vector<BitVec> secrets, int min_agree);

    /// Number of valid tables (0 when some question is unsatisfiable).
    std::uint64_t total() const;
    int free_question_count() const { return static_cast<int>(free_.size()); }

    std::optional<OracleTable> next();

  private:
    int n_ = 0;
    bool satisfiable_ = true;
    std::vector<std::uint64_t> base_;   // forced answers
    std::vector<std::uint32_t> free_;   // questions with both answers valid, ascending
    std::uint64_t cursor_ = 0;
};

}  // namespace qgs
