#ifndef KRONMCM_H
#define KRONMCM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KronmcmStatus {
  KRONMCM_STATUS_OK = 0,
  KRONMCM_STATUS_NULL_POINTER = 1,
  KRONMCM_STATUS_INVALID_UTF8 = 2,
  KRONMCM_STATUS_INVALID_ARGUMENT = 3,
  KRONMCM_STATUS_PARSE = 4,
  KRONMCM_STATUS_DIMENSION_MISMATCH = 5,
  KRONMCM_STATUS_INVALID_FORM = 6,
  KRONMCM_STATUS_INVALID_FIELD = 7,
  KRONMCM_STATUS_UNSUPPORTED = 8,
  KRONMCM_STATUS_CONTRACT_VIOLATION = 9,
  KRONMCM_STATUS_NOT_GORENSTEIN = 10,
  KRONMCM_STATUS_UNDECIDED = 11,
  KRONMCM_STATUS_OVERFLOW = 12,
  KRONMCM_STATUS_PANIC = 13,
} KronmcmStatus;

typedef enum KronmcmIso {
  KRONMCM_ISO_NOT_ISOMORPHIC = 0,
  KRONMCM_ISO_ISOMORPHIC = 1,
  KRONMCM_ISO_UNDECIDED = 2,
} KronmcmIso;

// A nondegenerate bilinear form on the arrow space.
typedef struct KronmcmForm KronmcmForm;

// A graded matrix factorization of `UV`.
typedef struct KronmcmMf KronmcmMf;

// An object of the derived category, a direct sum of shifted representations.
typedef struct KronmcmObject KronmcmObject;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or null. Owned by the
// library; valid until the next failing call.
const char *kronmcm_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, freed once.
void kronmcm_string_free(char *s);

// Library version, a static string.
const char *kronmcm_version(void);

// The identity form on `k^n`; `field` is `q` or `fp:P`.
//
// # Safety
// `field` must be a nul-terminated string and `out` writable.
enum KronmcmStatus kronmcm_form_identity(size_t n,
                                         const char *field_spec,
                                         struct KronmcmForm **out);

// The wedge pairing on the second exterior power of a 4-dimensional space (`n = 6`).
//
// # Safety
// As [`kronmcm_form_identity`].
enum KronmcmStatus kronmcm_form_wedge(const char *field_spec, struct KronmcmForm **out);

// Parses the form text format (`field`, `n`, then `n` lines `row: ...`).
//
// # Safety
// `text` must be a nul-terminated string and `out` writable.
enum KronmcmStatus kronmcm_form_parse(const char *text, struct KronmcmForm **out);

// Number of arrows, or 0 for a null handle.
//
// # Safety
// `form` must be null or a live handle.
size_t kronmcm_form_n(const struct KronmcmForm *form);

// # Safety
// `form` must be null or a handle from this library, freed once.
void kronmcm_form_free(struct KronmcmForm *form);

// Builds an object over the quiver of `form` from a sum such as
// `P1 + I2[-1]` (summands `P1 P2 I1 I2 S1 S2`, optional shift `[k]`), or
// from the object text format when `spec` starts with `object:`.
//
// # Safety
// `spec` must be a nul-terminated string, `form` a live handle, `out` writable.
enum KronmcmStatus kronmcm_object_parse(const char *spec,
                                        const struct KronmcmForm *form,
                                        struct KronmcmObject **out);

// # Safety
// `obj` must be null or a handle from this library, freed once.
void kronmcm_object_free(struct KronmcmObject *obj);

// Writes the object text format; release with [`kronmcm_string_free`].
//
// # Safety
// `obj` must be a live handle and `out` writable.
enum KronmcmStatus kronmcm_object_write(const struct KronmcmObject *obj, char **out);

// Short form such as `(6,1)[1]`; release with [`kronmcm_string_free`].
//
// # Safety
// As [`kronmcm_object_write`].
enum KronmcmStatus kronmcm_object_describe(const struct KronmcmObject *obj, char **out);

// `a^power(obj)` for the form `form`.
//
// # Safety
// `obj` and `form` must be live handles and `out` writable.
enum KronmcmStatus kronmcm_object_apply_a(const struct KronmcmObject *obj,
                                          const struct KronmcmForm *form,
                                          int64_t power,
                                          struct KronmcmObject **out);

// Isomorphism in the derived category.
//
// # Safety
// `x` and `y` must be live handles and `out` writable.
enum KronmcmStatus kronmcm_object_iso(const struct KronmcmObject *x,
                                      const struct KronmcmObject *y,
                                      enum KronmcmIso *out);

// `dim Hom(x, y[degree])` in the orbit category of `a[-1]`.
//
// # Safety
// `x`, `y` and `form` must be live handles and `out` writable.
enum KronmcmStatus kronmcm_orbit_hom(const struct KronmcmObject *x,
                                     const struct KronmcmObject *y,
                                     int64_t degree,
                                     const struct KronmcmForm *form,
                                     size_t *out);

// Parses the factorization text format (`field`, `deg0`, `deg1`, `phi` and
// `psi` rows). Shapes are checked here, the factorization identity by
// [`kronmcm_mf_validate`].
//
// # Safety
// `text` must be a nul-terminated string and `out` writable.
enum KronmcmStatus kronmcm_mf_parse(const char *text, struct KronmcmMf **out);

// # Safety
// `mf` must be null or a handle from this library, freed once.
void kronmcm_mf_free(struct KronmcmMf *mf);

// `Ok` when `phi psi = psi phi = UV` with homogeneous entries.
//
// # Safety
// `mf` must be a live handle.
enum KronmcmStatus kronmcm_mf_validate(const struct KronmcmMf *mf);

// Total dimension of the stable Hom space over all internal degrees.
//
// # Safety
// `x` and `y` must be live handles and `out` writable.
enum KronmcmStatus kronmcm_mf_stable_hom(const struct KronmcmMf *x,
                                         const struct KronmcmMf *y,
                                         size_t *out);

// Stable isomorphism, ignoring the grading.
//
// # Safety
// `x` and `y` must be live handles and `out` writable.
enum KronmcmStatus kronmcm_mf_iso(const struct KronmcmMf *x,
                                  const struct KronmcmMf *y,
                                  enum KronmcmIso *out);

// Gorenstein parameter of the `m`-th Veronese subring of a polynomial ring
// in `vars` variables; `NotGorenstein` when there is none.
//
// # Safety
// `out` must be writable.
enum KronmcmStatus kronmcm_gorenstein_veronese(size_t vars, size_t m, int64_t *out);

// Runs a command line (without the program name), e.g.
// `{"accept", "--format", "records"}`. Writes the command's exit status
// (0 pass, 1 failed check, 2 usage error) and its standard output; the
// diagnostic of a usage error is also the last error.
//
// # Safety
// `args` must point to `nargs` nul-terminated strings; `out_code` and
// `out_stdout` must be writable.
enum KronmcmStatus kronmcm_run(const char *const *args,
                               size_t nargs,
                               int32_t *out_code,
                               char **out_stdout);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KRONMCM_H */
