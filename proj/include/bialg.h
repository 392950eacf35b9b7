#ifndef BIALG_H
#define BIALG_H

#include <stddef.h>

#if defined(_WIN32)
#define BIALG_API __declspec(dllexport)
#else
#define BIALG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the CLI maps them onto its exit codes. */
typedef enum bialg_status {
    BIALG_OK = 0,
    BIALG_E_INPUT = 2,      /* malformed text, unknown letter, bad table */
    BIALG_E_SIZE_BOUND = 3, /* enumeration limit exceeded */
    BIALG_E_DOMAIN = 4,     /* mathematical precondition violated */
    BIALG_E_INTERNAL = 5
} bialg_status;

typedef enum bialg_format {
    BIALG_TEXT = 0,
    BIALG_JSON = 1 /* {"terms":[{"coeff":"p/q","basis":"..."}]} */
} bialg_format;

typedef enum bialg_hoffman_dir { BIALG_HOFFMAN_LOG = 0, BIALG_HOFFMAN_EXP = 1 } bialg_hoffman_dir;

typedef enum bialg_topo_op {
    BIALG_TOPO_DELTA = 0,    /* open-set coproduct */
    BIALG_TOPO_DELTA2 = 1,   /* contraction-restriction coproduct */
    BIALG_TOPO_PI = 2,       /* projection onto primitives */
    BIALG_TOPO_UPSILON = 3,
    BIALG_TOPO_LAMBDA = 4,
    BIALG_TOPO_EULERIAN = 5,
    BIALG_TOPO_PIEUL = 6,    /* pi o e */
    BIALG_TOPO_ANTIPODE = 7
} bialg_topo_op;

typedef enum bialg_topo_family { BIALG_FAMILY_LADDER = 0, BIALG_FAMILY_COROLLA = 1 } bialg_topo_family;

/* Opaque B-infinity structure on a tensor algebra. */
typedef struct bialg_structure bialg_structure;

/* Message of the last failed call on this thread; never NULL. */
BIALG_API const char* bialg_last_error(void);
/* Frees any string returned through an out parameter. */
BIALG_API void bialg_string_free(char* s);

/* Shuffle structure. With alphabet NULL, the letters are those of the given
   words, in order of first appearance, all of degree 1. */
BIALG_API bialg_status bialg_structure_shuffle(const char* alphabet, const char* const* words, size_t nwords,
                                               bialg_structure** out);
/* Structure from the table text format, or from a file holding it. */
BIALG_API bialg_status bialg_structure_parse(const char* text, bialg_structure** out);
BIALG_API bialg_status bialg_structure_load(const char* path, bialg_structure** out);
BIALG_API void bialg_structure_free(bialg_structure* s);
/* Table text of the structure (round trips through bialg_structure_parse). */
BIALG_API bialg_status bialg_structure_str(const bialg_structure* s, char** out);
/* Number of letters of its alphabet. */
BIALG_API size_t bialg_structure_alphabet_size(const bialg_structure* s);

/* x * y for tensors x, y ("3/2*a.b + c"). */
BIALG_API bialg_status bialg_product(const bialg_structure* s, const char* x, const char* y, bialg_format fmt,
                                     char** out);
/* Unit, associativity, commutativity and triviality report up to a total
   word length budget. Text is four "name: yes|no" lines and a budget line. */
BIALG_API bialg_status bialg_check_axioms(const bialg_structure* s, size_t budget, bialg_format fmt, char** out);
BIALG_API bialg_status bialg_eulerian(const bialg_structure* s, const char* x, bialg_format fmt, char** out);
BIALG_API bialg_status bialg_varpi(const bialg_structure* s, const char* x, bialg_format fmt, char** out);
/* Coalgebra isomorphism induced by the Hoffman log or exp structure map. */
BIALG_API bialg_status bialg_hoffman(const bialg_structure* s, bialg_hoffman_dir dir, const char* x,
                                     bialg_format fmt, char** out);
/* Isomorphism onto the shuffle algebra built from the canonical idempotent;
   its tangency is verified on products of total length <= budget. */
BIALG_API bialg_status bialg_omega(const bialg_structure* s, const char* x, size_t budget, bialg_format fmt,
                                   char** out);
/* Inverse isomorphism, from the shuffle algebra back. */
BIALG_API bialg_status bialg_zeta(const bialg_structure* s, const char* x, bialg_format fmt, char** out);

/* Group algebra of S_n. Elements are "c*[3 1 2] + ..." or id<n>, dyn<n>,
   sol<n>. */
BIALG_API bialg_status bialg_desc_dynkin(int n, bialg_format fmt, char** out);
BIALG_API bialg_status bialg_desc_solomon(int n, bialg_format fmt, char** out);
BIALG_API bialg_status bialg_desc_conv(const char* g, const char* h, bialg_format fmt, char** out);
BIALG_API bialg_status bialg_desc_compose(const char* g, const char* h, bialg_format fmt, char** out);
/* Idempotence, primitivity and Lie checks of the degree n elements. */
BIALG_API bialg_status bialg_desc_check(int n, bialg_format fmt, char** out);

/* Finite topologies: "n; 1<2, 2~3", or a name (1, l<n>, c<n>, d<n>, k<n>,
   disc<n>), or a combination "1/2*c3 + -1*l3". */
BIALG_API bialg_status bialg_topo(bialg_topo_op op, const char* x, bialg_format fmt, char** out);
/* Closed form of the canonical idempotent on l_n or c_n. */
BIALG_API bialg_status bialg_topo_family_eulerian(bialg_topo_family family, int n, bialg_format fmt, char** out);
/* Canonical name of a topology. */
BIALG_API bialg_status bialg_topo_canonical(const char* x, char** out);

#ifdef __cplusplus
}
#endif

#endif
