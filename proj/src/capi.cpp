#include "twobridge/twobridge.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "twobridge/diagram.hpp"
#include "twobridge/error.hpp"
#include "twobridge/report.hpp"

struct tb_diagram {
    twobridge::AnnularDiagram map;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tb_status fail(tb_status status, const std::string& message) {
    last_error = message;
    return status;
}

template <class F>
tb_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return TB_OK;
    } catch (const twobridge::ParseError& e) {
        return fail(TB_ERR_PARSE, e.what());
    } catch (const twobridge::DomainError& e) {
        return fail(TB_ERR_DOMAIN, e.what());
    } catch (const twobridge::InternalError& e) {
        return fail(TB_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TB_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TB_ERR_INTERNAL, e.what());
    }
}

template <class F>
tb_status json_call(char** out, F&& produce) {
    if (!out)
        return fail(TB_ERR_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = copy_out(produce()); });
}

twobridge::Slope slope(const char* text) {
    if (!text)
        throw twobridge::ParseError("null slope");
    return twobridge::Slope::parse(text);
}

twobridge::Word word(const char* text) {
    if (!text)
        throw twobridge::ParseError("null word");
    return twobridge::Word(text);
}

} // namespace

extern "C" {

const char* tb_version(void) {
    return "0.1.0";
}

const char* tb_last_error(void) {
    return last_error.c_str();
}

void tb_string_free(char* s) {
    std::free(s);
}

void tb_oracle_options_init(tb_oracle_options* options) {
    if (!options)
        return;
    options->max_len = 0;
    options->max_depth = 0;
    options->max_states = 0;
    options->max_degree = -1;
    options->timeout_seconds = 0;
}

tb_status tb_relator_json(const char* r, char** out) {
    return json_call(out, [&] { return twobridge::report::relator(slope(r)); });
}

tb_status tb_sseq_json(const char* r, char** out) {
    return json_call(out, [&] { return twobridge::report::sseq(slope(r)); });
}

tb_status tb_decompose_json(const char* r, char** out) {
    return json_call(out, [&] { return twobridge::report::decompose(slope(r)); });
}

tb_status tb_pieces_json(const char* r, int max_n, char** out) {
    return json_call(out, [&] { return twobridge::report::pieces(slope(r), max_n); });
}

tb_status tb_check_sc_json(const char* r, char** out) {
    return json_call(out, [&] { return twobridge::report::check_sc(slope(r)); });
}

tb_status tb_reduce_json(const char* r, const char* s, char** out) {
    return json_call(out, [&] { return twobridge::report::reduce(slope(r), slope(s)); });
}

tb_status tb_tau_json(int64_t p, const char* s, char** out) {
    return json_call(out, [&] { return twobridge::report::tau(p, slope(s)); });
}

tb_status tb_decide_json(int64_t p, const char* s, const char* s2, const char* certificate_format, char** out) {
    return json_call(out, [&] {
        std::optional<twobridge::DiagramFormat> format;
        if (certificate_format)
            format = twobridge::parse_diagram_format(certificate_format);
        return twobridge::report::decide(p, slope(s), slope(s2), format);
    });
}

tb_status tb_oracle_json(int64_t p, const char* w1, const char* w2, const tb_oracle_options* options, char** out) {
    tb_oracle_options opts;
    tb_oracle_options_init(&opts);
    if (options)
        opts = *options;
    if (opts.max_len < 0 || opts.max_depth < 0 || opts.max_states < 0 || opts.max_degree < -1 || opts.max_degree > 8)
        return fail(TB_ERR_ARGUMENT, "oracle options out of range");
    return json_call(out, [&] {
        twobridge::OracleBudget budget;
        budget.max_len = static_cast<std::size_t>(opts.max_len);
        budget.max_depth = static_cast<std::size_t>(opts.max_depth);
        if (opts.max_states > 0)
            budget.max_states = static_cast<std::size_t>(opts.max_states);
        if (opts.timeout_seconds > 0)
            budget.deadline = std::chrono::steady_clock::now() +
                              std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                  std::chrono::duration<double>(opts.timeout_seconds));
        const int degree = opts.max_degree < 0 ? 6 : opts.max_degree;
        return twobridge::report::oracle(p, word(w1), word(w2), budget, degree);
    });
}

tb_status tb_fan_build(int64_t p, const char* s, tb_diagram** out) {
    if (!out)
        return fail(TB_ERR_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new tb_diagram{twobridge::build_fan(p, slope(s))}; });
}

tb_status tb_diagram_add_layer(tb_diagram* diagram, int64_t p) {
    if (!diagram)
        return fail(TB_ERR_ARGUMENT, "null diagram");
    return guarded([&] {
        auto copy = diagram->map;
        twobridge::add_inner_layer(copy, p);
        diagram->map = std::move(copy);
    });
}

tb_status tb_diagram_parse(const char* json, tb_diagram** out) {
    if (!out || !json)
        return fail(TB_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new tb_diagram{twobridge::parse_diagram_json(json)}; });
}

tb_status tb_diagram_emit(const tb_diagram* diagram, const char* format, char** out) {
    if (!diagram || !format)
        return fail(TB_ERR_ARGUMENT, "null argument");
    return json_call(out, [&] {
        return twobridge::emit_diagram(diagram->map, twobridge::parse_diagram_format(format));
    });
}

tb_status tb_diagram_validate_json(const tb_diagram* diagram, int64_t p, char** out) {
    if (!diagram)
        return fail(TB_ERR_ARGUMENT, "null diagram");
    return json_call(out, [&] { return twobridge::report::validate(diagram->map, p); });
}

int tb_diagram_equal(const tb_diagram* x, const tb_diagram* y) {
    if (!x || !y)
        return 0;
    return x->map == y->map ? 1 : 0;
}

void tb_diagram_free(tb_diagram* diagram) {
    delete diagram;
}

} // extern "C"
