// Command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <string>

#include "twobridge/twobridge.h"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kDomain = 1, kParse = 2, kInternal = 3 };

int exit_code(tb_status status) {
    switch (status) {
    case TB_OK: return kOk;
    case TB_ERR_DOMAIN: return kDomain;
    case TB_ERR_INTERNAL: return kInternal;
    default: return kParse;
    }
}

void render_text(const json& j, const std::string& indent, std::ostream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        out << indent << it.key() << ":";
        if (v.is_object()) {
            out << "\n";
            render_text(v, indent + "  ", out);
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_primitive(); })) {
            std::string sep = " ";
            for (const auto& e : v) {
                out << sep << (e.is_string() ? e.get<std::string>() : e.dump());
                sep = ", ";
            }
            out << "\n";
        } else if (v.is_array()) {
            out << "\n";
            for (const auto& e : v) {
                if (e.is_object()) {
                    out << indent << "  -\n";
                    render_text(e, indent + "    ", out);
                } else {
                    out << indent << "  - " << e.dump() << "\n";
                }
            }
        } else if (v.is_string()) {
            out << " " << v.get<std::string>() << "\n";
        } else {
            out << " " << v.dump() << "\n";
        }
    }
}

// Prints a JSON result in the requested format, or the error message.
int emit(tb_status status, char* result, const std::string& format) {
    if (status != TB_OK) {
        std::cerr << "error: " << tb_last_error() << "\n";
        return exit_code(status);
    }
    std::string text(result);
    tb_string_free(result);
    if (format == "text") {
        render_text(json::parse(text), "", std::cout);
    } else {
        std::cout << text << "\n";
    }
    return kOk;
}

int emit_raw(tb_status status, char* result) {
    if (status != TB_OK) {
        std::cerr << "error: " << tb_last_error() << "\n";
        return exit_code(status);
    }
    const std::string text(result);
    tb_string_free(result);
    std::cout << text;
    if (!text.empty() && text.back() != '\n')
        std::cout << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorics of 2-bridge link groups and homotopy of loops on the bridge sphere of K(1/p)"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    int code = kOk;
    std::string r, s, s2, w1, w2, emit_format = "json", certificate;
    std::int64_t p = 0;
    int max_n = 2, layers = 1, max_degree = 6;
    std::int64_t budget = 0, max_depth = 0, max_states = 0;
    double timeout = 0;
    bool validate = false;

    auto* relator = app.add_subcommand("relator", "Relator u_r, its inner word and S-sequences");
    relator->add_option("r", r, "Slope q/p with 0 <= r <= 1, or inf")->required();
    relator->callback([&] {
        char* out = nullptr;
        const tb_status status = tb_relator_json(r.c_str(), &out);
        code = emit(status, out, format);
    });

    auto* sseq = app.add_subcommand("sseq", "S(r) from the closed-form term formula");
    sseq->add_option("r", r, "Slope q/p with 0 <= r <= 1")->required();
    sseq->callback([&] {
        char* out = nullptr;
        const tb_status status = tb_sseq_json(r.c_str(), &out);
        code = emit(status, out, format);
    });

    auto* decompose = app.add_subcommand("decompose", "Split S(r) as (S1, S2, S1, S2)");
    decompose->add_option("r", r, "Slope q/p with 0 < r <= 1")->required();
    decompose->callback([&] {
        char* out = nullptr;
        const tb_status status = tb_decompose_json(r.c_str(), &out);
        code = emit(status, out, format);
    });

    auto* pieces = app.add_subcommand("pieces", "Pieces and maximal n-pieces of R(u_r)");
    pieces->add_option("r", r, "Slope q/p with 0 <= r <= 1")->required();
    pieces->add_option("--max-n", max_n, "Largest n for maximal n-pieces")->check(CLI::Range(1, 2));
    pieces->callback([&] {
        char* out = nullptr;
        const tb_status status = tb_pieces_json(r.c_str(), max_n, &out);
        code = emit(status, out, format);
    });

    auto* check_sc = app.add_subcommand("check-sc", "Check C(4) and T(4) for R(u_r)");
    check_sc->add_option("r", r, "Slope q/p with 0 <= r <= 1")->required();
    check_sc->callback([&] {
        char* out = nullptr;
        const tb_status status = tb_check_sc_json(r.c_str(), &out);
        code = emit(status, out, format);
    });

    auto* reduce = app.add_subcommand("reduce", "Reduce s to its orbit representative for the group at r");
    reduce->add_option("--r", r, "Slope with 0 < r < 1")->required();
    reduce->add_option("s", s, "Slope to reduce")->required();
    reduce->callback([&] {
        char* out = nullptr;
        const tb_status status = tb_reduce_json(r.c_str(), s.c_str(), &out);
        code = emit(status, out, format);
    });

    auto* tau = app.add_subcommand("tau", "Apply c/d -> c/(cp - d)");
    tau->add_option("--p", p, "p >= 2")->required();
    tau->add_option("s", s, "Slope")->required();
    tau->callback([&] {
        char* out = nullptr;
        const tb_status status = tb_tau_json(p, s.c_str(), &out);
        code = emit(status, out, format);
    });

    auto* decide = app.add_subcommand("decide", "Are the loops of slopes s and s' homotopic in the complement of K(1/p)?");
    decide->add_option("--p", p, "p >= 2")->required();
    decide->add_option("s", s, "First slope")->required();
    decide->add_option("s_prime", s2, "Second slope")->required();
    decide->add_option("--certificate", certificate, "Attach the fan certificate")
        ->check(CLI::IsMember({"json", "dot", "svg"}));
    decide->callback([&] {
        char* out = nullptr;
        const tb_status status = tb_decide_json(p, s.c_str(), s2.c_str(), certificate.empty() ? nullptr : certificate.c_str(), &out);
        code = emit(status, out, format);
    });

    auto* fan = app.add_subcommand("fan", "Build the annular fan diagram for s in I2(1/p)");
    fan->add_option("--p", p, "p >= 2")->required();
    fan->add_option("--s", s, "Slope q1/p1")->required();
    fan->add_option("--emit", emit_format, "Rendering")->check(CLI::IsMember({"json", "dot", "svg"}));
    fan->add_option("--layers", layers, "Number of stacked layers")->check(CLI::Range(1, 16));
    fan->add_flag("--validate", validate, "Print the validation report instead of the diagram");
    fan->callback([&] {
        tb_diagram* d = nullptr;
        tb_status status = tb_fan_build(p, s.c_str(), &d);
        for (int k = 1; status == TB_OK && k < layers; ++k)
            status = tb_diagram_add_layer(d, p);
        char* out = nullptr;
        if (status == TB_OK && validate) {
            status = tb_diagram_validate_json(d, p, &out);
            code = emit(status, out, format);
        } else if (status == TB_OK) {
            status = tb_diagram_emit(d, emit_format.c_str(), &out);
            code = emit_raw(status, out);
        } else {
            code = emit(status, nullptr, format);
        }
        tb_diagram_free(d);
    });

    auto* oracle = app.add_subcommand("oracle", "Search for a conjugacy witness or a separating quotient");
    oracle->add_option("--p", p, "p >= 2")->required();
    oracle->add_option("--w1", w1, "Cyclically reduced word over a, b, A, B")->required();
    oracle->add_option("--w2", w2, "Cyclically reduced word over a, b, A, B")->required();
    oracle->add_option("--budget", budget, "Longest intermediate word (0: max(|w1|, |w2|))")->check(CLI::NonNegativeNumber);
    oracle->add_option("--max-depth", max_depth, "Longest trace (0: default)")->check(CLI::NonNegativeNumber);
    oracle->add_option("--max-states", max_states, "State cap (0: default)")->check(CLI::NonNegativeNumber);
    oracle->add_option("--max-degree", max_degree, "Largest permutation degree (0 disables)")->check(CLI::Range(0, 8));
    oracle->add_option("--timeout", timeout, "Seconds before the search gives up")->check(CLI::NonNegativeNumber);
    oracle->callback([&] {
        tb_oracle_options opts;
        tb_oracle_options_init(&opts);
        opts.max_len = budget;
        opts.max_depth = max_depth;
        opts.max_states = max_states;
        opts.max_degree = max_degree;
        opts.timeout_seconds = timeout;
        char* out = nullptr;
        const tb_status status = tb_oracle_json(p, w1.c_str(), w2.c_str(), &opts, &out);
        code = emit(status, out, format);
    });

    for (auto* sub : {relator, sseq, decompose, pieces, check_sc, reduce, tau, decide, fan, oracle})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }
    return code;
}
