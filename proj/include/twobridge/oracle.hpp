#pragma once

// One-sided checks of conjugacy in G(K(1/p)) = <a, b | u_{1/p}>: bounded
// search for a rewriting witness, and separation by the abelianization or
// by permutation representations.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "twobridge/cancel.hpp"
#include "twobridge/word.hpp"

namespace twobridge {

enum class OracleStatus { ConjugateWitnessed, Separated, Unknown };
std::string_view status_name(OracleStatus status);

// Zero fields select defaults: max_len = max(|w1|, |w2|),
// max_depth = 4|u_{1/p}| + |w1| + |w2|.
struct OracleBudget {
    std::size_t max_len = 0;
    std::size_t max_depth = 0;
    std::size_t max_states = 1'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// One move: rotate the current cyclic word (canonical representative) to
// start at `rotation`, prepend `relator`, cyclically reduce.
struct TraceStep {
    std::size_t rotation = 0;
    Word relator;
    Word result;  // canonical representative after the move
};

// Two chains of moves meeting at `meet`: one from w1, one from w2 or w2^-1.
struct WitnessTrace {
    std::vector<TraceStep> from_w1;
    std::vector<TraceStep> from_w2;
    bool w2_inverted = false;
    Word meet;

    std::size_t length() const { return from_w1.size() + from_w2.size(); }
};

enum class SeparationKind { Abelianization, Permutation };

struct Separation {
    SeparationKind kind = SeparationKind::Abelianization;
    // Abelianization: images in Z (p odd) or Z^2 (p even).
    std::vector<long> image_w1, image_w2;
    // Permutation: a, b images on {0, ..., degree-1} and cycle types.
    int degree = 0;
    std::vector<int> a_image, b_image;
    std::vector<int> cycle_type_w1, cycle_type_w2;
};

struct OracleVerdict {
    OracleStatus status = OracleStatus::Unknown;
    std::optional<WitnessTrace> trace;
    std::optional<Separation> separation;
    std::size_t states_explored = 0;
    bool exhausted = false;  // every state within max_len was visited
    bool timed_out = false;
};

// Bidirectional breadth-first search; deterministic for a given budget.
// w1 and w2 must be cyclically reduced.
OracleVerdict witness_search(std::int64_t p, const Word& w1, const Word& w2, const OracleBudget& budget = {});

// Re-derives every step of the trace from scratch.
bool replay_trace(std::int64_t p, const Word& w1, const Word& w2, const WitnessTrace& trace);

std::optional<Separation> abelianization_separation(std::int64_t p, const Word& w1, const Word& w2);
inline bool abelianization_separates(std::int64_t p, const Word& w1, const Word& w2) {
    return abelianization_separation(p, w1, w2).has_value();
}

// All homomorphisms G(K(1/p)) -> S_n, 2 <= n <= max_degree, with a sent to a
// cycle-type representative and b to any permutation.
class PermutationQuotients {
public:
    PermutationQuotients(std::int64_t p, int max_degree);

    struct Hom {
        int degree = 0;
        std::vector<int> a, b;
    };
    const std::vector<Hom>& homs() const { return homs_; }
    std::int64_t p() const { return p_; }
    int max_degree() const { return max_degree_; }

    std::optional<Separation> separate(const Word& w1, const Word& w2) const;

    static std::vector<int> image(const Hom& hom, const Word& w);
    static std::vector<int> cycle_type(const std::vector<int>& perm);

private:
    std::int64_t p_;
    int max_degree_;
    std::vector<Hom> homs_;
};

OracleVerdict finite_quotient_separates(std::int64_t p, const Word& w1, const Word& w2, int max_degree);

// Abelianization, then permutation quotients, then witness search.
OracleVerdict run_oracle(std::int64_t p, const Word& w1, const Word& w2, const OracleBudget& budget,
                         int max_degree);

} // namespace twobridge
