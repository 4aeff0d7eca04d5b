#include "twobridge/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "twobridge/error.hpp"
#include "twobridge/farey.hpp"
#include "twobridge/relator.hpp"

namespace twobridge {

namespace {

bool cancels(char x, char y) {
    return x != y && (x ^ 0x20) == y;
}

std::string canonical(const std::string& s) {
    const auto k = least_rotation(s);
    return s.substr(k) + s.substr(0, k);
}

// Cyclic reduction of relator + rotation, or nullopt when the result is
// known to be longer than max_len.
std::optional<std::string> apply_move(const std::string& rel, const std::string& rot, std::size_t max_len) {
    const std::size_t m = rel.size(), n = rot.size();
    std::size_t k1 = 0;
    while (k1 < m && k1 < n && cancels(rel[m - 1 - k1], rot[k1]))
        ++k1;
    if (k1 < m && k1 < n) {
        std::size_t k2 = 0;
        while (k2 < m - k1 && k2 < n - k1 && cancels(rel[k2], rot[n - 1 - k2]))
            ++k2;
        if (k2 < m - k1 && k2 < n - k1) {
            const std::size_t len = m + n - 2 * k1 - 2 * k2;
            if (len > max_len)
                return std::nullopt;
            return rel.substr(k2, m - k1 - k2) + rot.substr(k1, n - k1 - k2);
        }
    }
    auto w = cyclic_reduce(Word(rel + rot)).str();
    if (w.size() > max_len)
        return std::nullopt;
    return w;
}

struct Parent {
    std::string prev;
    std::uint32_t rotation = 0;
    std::uint32_t relator = 0;
    bool root = true;
};

struct Side {
    std::unordered_map<std::string, Parent> seen;
    std::vector<std::string> frontier;
    std::size_t depth = 0;
};

std::vector<TraceStep> chain_to(const Side& side, const std::string& state, const std::vector<std::string>& rels) {
    std::vector<TraceStep> steps;
    std::string cur = state;
    while (true) {
        const auto& parent = side.seen.at(cur);
        if (parent.root)
            break;
        steps.push_back({parent.rotation, Word(rels[parent.relator]), Word(cur)});
        cur = parent.prev;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

std::string root_of(const Side& side, std::string state) {
    while (!side.seen.at(state).root)
        state = side.seen.at(state).prev;
    return state;
}

void require_cyclically_reduced(const Word& w, const char* name) {
    if (!w.is_cyclically_reduced())
        throw DomainError(std::string(name) + " must be cyclically reduced, got '" + w.str() + "'");
}

std::vector<Word> relators_for(std::int64_t p) {
    if (p < 2)
        throw DomainError("the oracle needs p >= 2");
    return SymmetrizedSet(riley_word(Slope(1, p)).u).elements();
}

} // namespace

std::string_view status_name(OracleStatus status) {
    switch (status) {
    case OracleStatus::ConjugateWitnessed: return "conjugate-witnessed";
    case OracleStatus::Separated: return "separated";
    case OracleStatus::Unknown: return "unknown";
    }
    return "unknown";
}

OracleVerdict witness_search(std::int64_t p, const Word& w1, const Word& w2, const OracleBudget& budget) {
    require_cyclically_reduced(w1, "w1");
    require_cyclically_reduced(w2, "w2");
    std::vector<std::string> rels;
    for (const auto& r : relators_for(p))
        rels.push_back(r.str());
    const std::size_t max_len = budget.max_len ? budget.max_len : std::max(w1.size(), w2.size());
    const std::size_t max_depth = budget.max_depth ? budget.max_depth : 8 * static_cast<std::size_t>(p) + w1.size() + w2.size();

    OracleVerdict verdict;
    Side a, b;
    const std::string start = canonical(w1.str());
    a.seen[start] = Parent{};
    a.frontier.push_back(start);
    for (const auto& t : {w2, w2.inverse()}) {
        const std::string c = canonical(t.str());
        if (b.seen.emplace(c, Parent{}).second)
            b.frontier.push_back(c);
    }

    auto finish = [&](const std::string& meet) {
        WitnessTrace trace;
        trace.meet = Word(meet);
        trace.from_w1 = chain_to(a, meet, rels);
        trace.from_w2 = chain_to(b, meet, rels);
        trace.w2_inverted = root_of(b, meet) != canonical(w2.str());
        verdict.status = OracleStatus::ConjugateWitnessed;
        verdict.trace = std::move(trace);
        verdict.states_explored = a.seen.size() + b.seen.size();
    };
    if (b.seen.count(start)) {
        finish(start);
        return verdict;
    }

    while (!a.frontier.empty() && !b.frontier.empty()) {
        if (a.depth + b.depth >= max_depth)
            break;
        const bool expand_a = a.frontier.size() <= b.frontier.size();
        Side& side = expand_a ? a : b;
        const Side& other = expand_a ? b : a;
        std::vector<std::string> next;
        std::size_t ticks = 0;
        for (const auto& state : side.frontier) {
            const std::size_t n = state.size();
            for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
                const std::string rot = n ? state.substr(i) + state.substr(0, i) : state;
                for (std::size_t k = 0; k < rels.size(); ++k) {
                    auto moved = apply_move(rels[k], rot, max_len);
                    if (!moved)
                        continue;
                    std::string c = canonical(*moved);
                    auto [it, fresh] = side.seen.try_emplace(c, Parent{state, static_cast<std::uint32_t>(i),
                                                                        static_cast<std::uint32_t>(k), false});
                    if (!fresh)
                        continue;
                    if (other.seen.count(c)) {
                        finish(c);
                        return verdict;
                    }
                    next.push_back(std::move(c));
                }
            }
            if (a.seen.size() + b.seen.size() > budget.max_states) {
                verdict.states_explored = a.seen.size() + b.seen.size();
                return verdict;
            }
            if (budget.deadline && (ticks++ % 64 == 0) && std::chrono::steady_clock::now() > *budget.deadline) {
                verdict.timed_out = true;
                verdict.states_explored = a.seen.size() + b.seen.size();
                return verdict;
            }
        }
        side.frontier = std::move(next);
        ++side.depth;
    }
    verdict.exhausted = a.frontier.empty() || b.frontier.empty();
    verdict.states_explored = a.seen.size() + b.seen.size();
    return verdict;
}

bool replay_trace(std::int64_t p, const Word& w1, const Word& w2, const WitnessTrace& trace) {
    if (!w1.is_cyclically_reduced() || !w2.is_cyclically_reduced())
        return false;
    const SymmetrizedSet R(riley_word(Slope(1, p)).u);
    auto run = [&](const Word& start, const std::vector<TraceStep>& steps) {
        std::string cur = canonical(start.str());
        for (const auto& step : steps) {
            if (!R.contains(step.relator))
                return false;
            if (!cur.empty() && step.rotation >= cur.size())
                return false;
            const std::string rot = cur.empty() ? cur : cur.substr(step.rotation) + cur.substr(0, step.rotation);
            cur = canonical(cyclic_reduce(step.relator + Word(rot)).str());
            if (cur != step.result.str())
                return false;
        }
        return cur == canonical(trace.meet.str());
    };
    return run(w1, trace.from_w1) && run(trace.w2_inverted ? w2.inverse() : w2, trace.from_w2);
}

std::optional<Separation> abelianization_separation(std::int64_t p, const Word& w1, const Word& w2) {
    const auto [x, y] = exponent_sums(riley_word(Slope(1, p)).u);
    auto image = [&](const Word& w) -> std::vector<long> {
        const auto [ea, eb] = exponent_sums(w);
        if (x == 0 && y == 0)
            return {ea, eb};
        // Z^2 / <(x, y)> with gcd(x, y) = 1 is Z via (e_a, e_b) -> y e_a - x e_b.
        return {y * ea - x * eb};
    };
    Separation sep;
    sep.kind = SeparationKind::Abelianization;
    sep.image_w1 = image(w1);
    sep.image_w2 = image(w2);
    std::vector<long> negated = sep.image_w2;
    for (auto& v : negated)
        v = -v;
    if (sep.image_w1 == sep.image_w2 || sep.image_w1 == negated)
        return std::nullopt;
    return sep;
}

PermutationQuotients::PermutationQuotients(std::int64_t p, int max_degree) : p_(p), max_degree_(max_degree) {
    if (max_degree > 9)
        throw DomainError("permutation quotients are limited to degree 9");
    const Word u = riley_word(Slope(1, p)).u;
    for (int n = 2; n <= max_degree; ++n) {
        // one a per cycle type: consecutive cycles of nonincreasing lengths
        std::vector<std::vector<int>> partitions;
        std::vector<int> part;
        auto rec = [&](auto&& self, int left, int cap) -> void {
            if (left == 0) {
                partitions.push_back(part);
                return;
            }
            for (int k = std::min(left, cap); k >= 1; --k) {
                part.push_back(k);
                self(self, left - k, k);
                part.pop_back();
            }
        };
        rec(rec, n, n);
        for (const auto& lengths : partitions) {
            std::vector<int> a(n);
            int pos = 0;
            for (int len : lengths) {
                for (int i = 0; i < len; ++i)
                    a[pos + i] = pos + (i + 1) % len;
                pos += len;
            }
            std::vector<int> b(n);
            std::iota(b.begin(), b.end(), 0);
            do {
                Hom hom{n, a, b};
                const auto img = image(hom, u);
                bool identity = true;
                for (int i = 0; i < n && identity; ++i)
                    identity = img[i] == i;
                if (identity)
                    homs_.push_back(std::move(hom));
            } while (std::next_permutation(b.begin(), b.end()));
        }
    }
}

std::vector<int> PermutationQuotients::image(const Hom& hom, const Word& w) {
    const int n = hom.degree;
    std::vector<int> a_inv(n), b_inv(n);
    for (int i = 0; i < n; ++i) {
        a_inv[hom.a[i]] = i;
        b_inv[hom.b[i]] = i;
    }
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    // letters act left to right: i -> x1(i) -> x2(x1(i)) ...
    for (char c : w.str()) {
        const std::vector<int>& g = c == 'a' ? hom.a : c == 'b' ? hom.b : c == 'A' ? a_inv : b_inv;
        for (int& v : img)
            v = g[v];
    }
    return img;
}

std::vector<int> PermutationQuotients::cycle_type(const std::vector<int>& perm) {
    std::vector<int> lengths;
    std::vector<bool> done(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (done[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(perm[j])) {
            done[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

std::optional<Separation> PermutationQuotients::separate(const Word& w1, const Word& w2) const {
    for (const auto& hom : homs_) {
        auto t1 = cycle_type(image(hom, w1));
        auto t2 = cycle_type(image(hom, w2));
        if (t1 != t2) {
            Separation sep;
            sep.kind = SeparationKind::Permutation;
            sep.degree = hom.degree;
            sep.a_image = hom.a;
            sep.b_image = hom.b;
            sep.cycle_type_w1 = std::move(t1);
            sep.cycle_type_w2 = std::move(t2);
            return sep;
        }
    }
    return std::nullopt;
}

OracleVerdict finite_quotient_separates(std::int64_t p, const Word& w1, const Word& w2, int max_degree) {
    OracleVerdict verdict;
    if (auto sep = PermutationQuotients(p, max_degree).separate(w1, w2)) {
        verdict.status = OracleStatus::Separated;
        verdict.separation = std::move(sep);
    }
    return verdict;
}

OracleVerdict run_oracle(std::int64_t p, const Word& w1, const Word& w2, const OracleBudget& budget,
                         int max_degree) {
    if (p < 2)
        throw DomainError("the oracle needs p >= 2");
    require_cyclically_reduced(w1, "w1");
    require_cyclically_reduced(w2, "w2");
    OracleVerdict verdict;
    if (auto sep = abelianization_separation(p, w1, w2)) {
        verdict.status = OracleStatus::Separated;
        verdict.separation = std::move(sep);
        return verdict;
    }
    if (max_degree >= 2) {
        verdict = finite_quotient_separates(p, w1, w2, max_degree);
        if (verdict.status == OracleStatus::Separated)
            return verdict;
    }
    return witness_search(p, w1, w2, budget);
}

} // namespace twobridge
