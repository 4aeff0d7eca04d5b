#include "twobridge/report.hpp"

#include <json.hpp>

#include "twobridge/cancel.hpp"
#include "twobridge/decide.hpp"
#include "twobridge/error.hpp"
#include "twobridge/relator.hpp"

namespace twobridge::report {

namespace {

using json = nlohmann::ordered_json;

json words(const std::vector<Word>& ws) {
    json out = json::array();
    for (const auto& w : ws)
        out.push_back(w.str());
    return out;
}

json interval(const Slope& lo, const Slope& hi) {
    return json::array({lo.str(), hi.str()});
}

Word relator_word(const Slope& r) {
    const Word u = riley_word(r).u;
    if (u.empty())
        throw DomainError("u_r is the empty word for r = inf");
    return u;
}

json trace_steps(const std::vector<TraceStep>& steps) {
    json out = json::array();
    for (const auto& s : steps)
        out.push_back({{"rotation", s.rotation}, {"relator", s.relator.str()}, {"result", s.result.str()}});
    return out;
}

json diagram_summary(const AnnularDiagram& d, std::int64_t p) {
    json j;
    j["faces"] = d.faces.size();
    j["outer_label"] = d.outer_label().str();
    j["inner_label"] = d.inner_label().str();
    j["outer_s_seq"] = s_sequence(d.outer_label()).runs;
    j["inner_cs"] = cyclic_s_sequence(d.inner_label()).runs();
    const SymmetrizedSet R(riley_word(Slope(1, p)).u);
    j["reduced"] = is_reduced_diagram(d, R);
    const auto structure = validate_structure(d);
    j["structure_passed"] = structure.passed();
    return j;
}

} // namespace

std::string relator(const Slope& r) {
    const auto b = riley_word(r);
    json j;
    j["r"] = r.str();
    j["u"] = b.u.str();
    j["hat_u"] = b.hat_u.str();
    j["length"] = b.u.size();
    j["s_seq"] = b.s_seq.runs;
    j["cyclic_s_seq"] = b.cyclic_s_seq.runs();
    return j.dump();
}

std::string sseq(const Slope& r) {
    json j;
    j["s_seq"] = s_of_slope(r).runs;
    return j.dump();
}

std::string decompose(const Slope& r) {
    const auto d = twobridge::decompose(r);
    json j;
    j["r"] = r.str();
    j["continued_fraction"] = cf_expand(r).quotients;
    j["m"] = d.m;
    j["s1"] = d.s1.runs;
    j["s2"] = d.s2.runs;
    j["s_seq"] = s_of_slope(r).runs;
    return j.dump();
}

std::string pieces(const Slope& r, int max_n) {
    if (max_n < 1 || max_n > 2)
        throw DomainError("--max-n must be 1 or 2");
    const SymmetrizedSet R(relator_word(r));
    json j;
    j["r"] = r.str();
    j["relator"] = R.base().str();
    j["symmetrized_size"] = R.size();
    j["pieces"] = words(enumerate_pieces(R));
    json maximal;
    for (int n = 1; n <= max_n; ++n) {
        json list = json::array();
        for (const auto& mp : maximal_n_pieces(R, n))
            list.push_back({{"start", mp.start}, {"word", mp.word.str()}});
        maximal[std::to_string(n)] = list;
    }
    j["maximal_pieces"] = maximal;
    return j.dump();
}

std::string check_sc(const Slope& r) {
    const SymmetrizedSet R(relator_word(r));
    const auto c = check_C(R, 4);
    const auto t = check_T(R, 4);
    json j;
    j["r"] = r.str();
    j["relator"] = R.base().str();
    j["C4"] = {{"holds", c.holds},
               {"min_piece_count", c.min_count},
               {"witness", c.witness.str()},
               {"decomposition", words(c.decomposition.pieces)}};
    json counter = nullptr;
    if (t.counterexample)
        counter = words({(*t.counterexample)[0], (*t.counterexample)[1], (*t.counterexample)[2]});
    j["T4"] = {{"holds", t.holds}, {"triples_examined", t.triples_examined}, {"counterexample", counter}};
    return j.dump();
}

std::string reduce(const Slope& r, const Slope& s) {
    const ReflectionGroup group(r);
    const Slope s0 = group.reduce(s);
    json j;
    j["r"] = r.str();
    j["s"] = s.str();
    j["reduced"] = s0.str();
    j["region"] = std::string(region_name(group.classify(s0)));
    j["null_homotopic"] = s0.is_infinite() || s0 == r;
    j["I1"] = interval(Slope(0, 1), group.domain().r1);
    j["I2"] = interval(group.domain().r2, Slope(1, 1));
    return j.dump();
}

std::string tau(std::int64_t p, const Slope& s) {
    json j;
    j["p"] = p;
    j["s"] = s.str();
    j["tau"] = twobridge::tau(p, s).str();
    return j.dump();
}

std::string decide(std::int64_t p, const Slope& s, const Slope& s2, std::optional<DiagramFormat> certificate) {
    const auto v = decide_homotopic(p, s, s2);
    json j;
    j["homotopic"] = v.homotopic;
    j["reason"] = std::string(reason_name(v.reason));
    j["p"] = p;
    j["s"] = s.str();
    j["s_prime"] = s2.str();
    j["reduced_s"] = v.reduced_s.str();
    j["reduced_s_prime"] = v.reduced_s2.str();
    if (v.certificate) {
        json cert = diagram_summary(*v.certificate, p);
        if (certificate) {
            const std::string body = emit_diagram(*v.certificate, *certificate);
            if (*certificate == DiagramFormat::Json)
                cert["diagram"] = json::parse(body);
            else
                cert["rendering"] = body;
        }
        j["certificate"] = cert;
    } else {
        j["certificate"] = nullptr;
    }
    return j.dump();
}

std::string oracle(std::int64_t p, const Word& w1, const Word& w2, const OracleBudget& budget, int max_degree) {
    const auto v = run_oracle(p, w1, w2, budget, max_degree);
    json j;
    j["status"] = std::string(status_name(v.status));
    j["p"] = p;
    j["w1"] = w1.str();
    j["w2"] = w2.str();
    if (v.trace) {
        j["trace"] = {{"from_w1", trace_steps(v.trace->from_w1)},
                      {"from_w2", trace_steps(v.trace->from_w2)},
                      {"w2_inverted", v.trace->w2_inverted},
                      {"meet", v.trace->meet.str()},
                      {"length", v.trace->length()},
                      {"replayed", replay_trace(p, w1, w2, *v.trace)}};
    } else {
        j["trace"] = nullptr;
    }
    if (v.separation) {
        const auto& s = *v.separation;
        if (s.kind == SeparationKind::Abelianization)
            j["separation"] = {{"kind", "abelianization"}, {"image_w1", s.image_w1}, {"image_w2", s.image_w2}};
        else
            j["separation"] = {{"kind", "permutation"},     {"degree", s.degree},
                               {"a", s.a_image},            {"b", s.b_image},
                               {"cycle_type_w1", s.cycle_type_w1}, {"cycle_type_w2", s.cycle_type_w2}};
    } else {
        j["separation"] = nullptr;
    }
    j["states_explored"] = v.states_explored;
    j["exhausted"] = v.exhausted;
    j["timed_out"] = v.timed_out;
    return j.dump();
}

std::string validate(const AnnularDiagram& d, std::int64_t p) {
    json j;
    j["map_problems"] = map_problems(d);
    const SymmetrizedSet R(riley_word(Slope(1, p)).u);
    try {
        j["reduced"] = is_reduced_diagram(d, R);
    } catch (const DomainError& e) {
        j["reduced"] = nullptr;
        j["reduced_error"] = e.what();
    }
    const auto s = validate_structure(d);
    j["structure"] = {{"annular", s.annular},
                      {"boundaries_simple", s.boundaries_simple},
                      {"boundary_degrees", s.boundary_degrees},
                      {"interior_degrees", s.interior_degrees},
                      {"face_degrees", s.face_degrees},
                      {"shared_vertices", s.shared_vertices},
                      {"passed", s.passed()},
                      {"failures", s.failures}};
    const auto gb = gauss_bonnet_check(d);
    j["gauss_bonnet"] = {{"lhs", gb.lhs},
                         {"rhs", gb.rhs},
                         {"boundary_term", gb.boundary_term},
                         {"interior_term", gb.interior_term},
                         {"face_term", gb.face_term},
                         {"boundary_vertices", gb.boundary_vertices},
                         {"boundary_edges", gb.boundary_edges},
                         {"holds", gb.holds},
                         {"equality", gb.equality},
                         {"identity", gb.identity}};
    try {
        j["layers"] = layer_decomposition(d);
    } catch (const DomainError& e) {
        j["layers"] = nullptr;
        j["layers_error"] = e.what();
    }
    j["outer_label"] = d.outer_label().str();
    j["inner_label"] = d.inner_label().str();
    return j.dump();
}

} // namespace twobridge::report
