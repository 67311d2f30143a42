#ifndef QLAT_QLAT_H
#define QLAT_QLAT_H

/* C interface to the qlat library.
 *
 * Every function returns a qlat_status; on failure qlat_last_error() holds a
 * message for the calling thread.  Strings returned through char** are
 * owned by the caller and released with qlat_free_string.  Handles are
 * released with their matching *_free function. */

#include <stddef.h>

#if defined(QLAT_BUILDING_LIBRARY)
#define QLAT_API __attribute__((visibility("default")))
#else
#define QLAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QLAT_OK = 0,
  QLAT_ERR_DOMAIN = 1,
  QLAT_ERR_UNSUPPORTED = 2,
  QLAT_ERR_PARSE = 3,
  QLAT_ERR_IO = 4,
  QLAT_ERR_ARGUMENT = 5,
  QLAT_ERR_INTERNAL = 6
} qlat_status;

typedef struct qlat_group qlat_group;
typedef struct qlat_patch qlat_patch;

QLAT_API const char* qlat_last_error(void);
QLAT_API void qlat_free_string(char* s);
QLAT_API const char* qlat_version(void);

/* Root systems are named "H3", "H4", "I2-n" (n in 5, 8, 10, 12 for exact work). */
QLAT_API qlat_status qlat_root_count(const char* system, size_t* count);
/* JSON: {system, kappa, count, roots: [{text, exact: [[p,q,den],...], float: [...]}]} */
QLAT_API qlat_status qlat_roots_json(const char* system, char** json);

QLAT_API qlat_status qlat_group_generate(const char* system, qlat_group** out);
QLAT_API void qlat_group_free(qlat_group* g);
QLAT_API qlat_status qlat_group_order(const qlat_group* g, size_t* order);
QLAT_API qlat_status qlat_group_json(const qlat_group* g, char** json);
/* Orbit of a vector given in text form ("1/2,t/2,(t-1)/2,0"), as JSON. */
QLAT_API qlat_status qlat_group_orbit_json(const qlat_group* g, const char* vector, char** json);

/* Quaternion-pair realisation of the H4 group: raw parameterisations,
 * distinct matrices, and the fiber sizes of the map. */
QLAT_API qlat_status qlat_h4_quaternion_census(size_t* parameterizations, size_t* distinct,
                                               size_t* min_fiber, size_t* max_fiber);

/* Checks all 120^2 products of unit icosians; *failures counts products
 * that are not unit icosians. */
QLAT_API qlat_status qlat_icosian_closure(size_t* products, size_t* failures);
QLAT_API qlat_status qlat_icosian_ring_member(const char* quaternion, int* member);

/* Quasilattices: "I2-5", "I2-8", "I2-12", "H3-primitive", "H3-fcc", "H3-bcc", "H4". */
QLAT_API qlat_status qlat_ql_member(const char* ql, const char* vector, int* member);
/* Verdict: "invariant", "proper-sublattice" or "not-closed". */
QLAT_API qlat_status qlat_ql_scale(const char* ql, const char* factor, long long power, char** verdict);
QLAT_API qlat_status qlat_residues_json(char** json);
QLAT_API qlat_status qlat_verify_table1_json(char** json, size_t* passed, size_t* total);

/* Cut-and-project.  Window shape: "cell" or "ball". */
QLAT_API qlat_status qlat_patch_generate(const char* target, const char* window, double window_scale,
                                         double radius, qlat_patch** out);
QLAT_API void qlat_patch_free(qlat_patch* p);
QLAT_API qlat_status qlat_patch_size(const qlat_patch* p, size_t* size, size_t* dim);
/* Copies positions row-major into out (size * dim doubles). */
QLAT_API qlat_status qlat_patch_positions(const qlat_patch* p, double* out, size_t capacity);
QLAT_API qlat_status qlat_patch_write_csv(const qlat_patch* p, const char* path);
/* Reads the x columns of a patch CSV; *out is malloc'ed (free with qlat_free_doubles). */
QLAT_API qlat_status qlat_read_patch_positions(const char* path, double** out, size_t* size, size_t* dim);
QLAT_API void qlat_free_doubles(double* p);
/* Reciprocal vector (parallel part) for integer coordinates on the dual source basis. */
QLAT_API qlat_status qlat_reciprocal_point(const char* target, const long long* dual, size_t n, double* k,
                                           size_t dim);

/* Normalised |sum exp(i k.x)|^2 / N^2 for row-major points (n x dim) and
 * ks (m x dim); writes m values. */
QLAT_API qlat_status qlat_structure_factors(const double* points, size_t n, size_t dim, const double* ks,
                                            size_t m, double* out);

QLAT_API qlat_status qlat_e8_report_json(char** json);

/* Fundamental unit (a + b sqrt(delta)) / 2 of the ring of integers of Q(sqrt kappa). */
QLAT_API qlat_status qlat_fundamental_unit(int kappa, long long* a, long long* b, long long* delta,
                                           int* norm_sign);
QLAT_API qlat_status qlat_totient(unsigned long long n, unsigned long long* out);

#ifdef __cplusplus
}
#endif

#endif
