#ifndef TWOBRIDGE_H
#define TWOBRIDGE_H

/* C interface to the twobridge library. Every result is a JSON document
 * returned through an out-parameter and released with tb_string_free.
 * On failure the functions return a nonzero status and tb_last_error()
 * describes the problem (per thread, valid until the next call). */

#include <stdint.h>

#if defined(TB_BUILDING_LIBRARY)
#define TB_API __attribute__((visibility("default")))
#else
#define TB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tb_status {
    TB_OK = 0,
    TB_ERR_PARSE = 1,    /* malformed slope, word, format name or JSON */
    TB_ERR_DOMAIN = 2,   /* well-formed input outside the domain */
    TB_ERR_INTERNAL = 3, /* a self-check failed */
    TB_ERR_ARGUMENT = 4  /* null pointer or out-of-range option */
} tb_status;

typedef struct tb_diagram tb_diagram;

typedef struct tb_oracle_options {
    int64_t max_len;         /* 0: max(|w1|, |w2|) */
    int64_t max_depth;       /* 0: 4|u_{1/p}| + |w1| + |w2| */
    int64_t max_states;      /* 0: 1000000 */
    int max_degree;          /* permutation degree bound; 0 disables, -1: 6 */
    double timeout_seconds;  /* <= 0: none */
} tb_oracle_options;

TB_API const char* tb_version(void);
TB_API const char* tb_last_error(void);
TB_API void tb_string_free(char* s);
TB_API void tb_oracle_options_init(tb_oracle_options* options);

TB_API tb_status tb_relator_json(const char* r, char** out);
TB_API tb_status tb_sseq_json(const char* r, char** out);
TB_API tb_status tb_decompose_json(const char* r, char** out);
TB_API tb_status tb_pieces_json(const char* r, int max_n, char** out);
TB_API tb_status tb_check_sc_json(const char* r, char** out);
TB_API tb_status tb_reduce_json(const char* r, const char* s, char** out);
TB_API tb_status tb_tau_json(int64_t p, const char* s, char** out);
/* certificate_format: NULL, "json", "dot" or "svg" */
TB_API tb_status tb_decide_json(int64_t p, const char* s, const char* s2, const char* certificate_format,
                                char** out);
/* options may be NULL for defaults */
TB_API tb_status tb_oracle_json(int64_t p, const char* w1, const char* w2, const tb_oracle_options* options,
                                char** out);

TB_API tb_status tb_fan_build(int64_t p, const char* s, tb_diagram** out);
TB_API tb_status tb_diagram_add_layer(tb_diagram* diagram, int64_t p);
TB_API tb_status tb_diagram_parse(const char* json, tb_diagram** out);
/* format: "json", "dot" or "svg" */
TB_API tb_status tb_diagram_emit(const tb_diagram* diagram, const char* format, char** out);
TB_API tb_status tb_diagram_validate_json(const tb_diagram* diagram, int64_t p, char** out);
TB_API int tb_diagram_equal(const tb_diagram* x, const tb_diagram* y);
TB_API void tb_diagram_free(tb_diagram* diagram);

#ifdef __cplusplus
}
#endif

#endif
