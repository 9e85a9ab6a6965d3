/* bqa - semiclassical and exact analysis of bifurcation-based annealing of
 * the ferromagnetic p-spin model with a nonstoquastic catalyst.
 *
 * C interface of the shared library. All functions return a bqa_status;
 * results travel through out-parameters or opaque handles. On failure a
 * thread-local message is available from bqa_last_error().
 */
#ifndef BQA_H
#define BQA_H

#include <stddef.h>

#if defined(_WIN32)
#define BQA_API __declspec(dllexport)
#else
#define BQA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bqa_status {
    BQA_OK = 0,
    BQA_ERR_DOMAIN = 1,      /* argument outside its mathematical domain */
    BQA_ERR_INVALID_ARG = 2, /* malformed argument: null, sizes, ordering */
    BQA_ERR_CONVERGENCE = 3, /* eigensolver missed its residual contract */
    BQA_ERR_INTERNAL = 4
} bqa_status;

/* Gaussian driver amplitude A(s) = A0 exp(-(2s-1)^2/(2 sigma2)) and linear
 * detuning B(s) = B0 (2s-1); all fields must be positive. */
typedef struct bqa_schedule {
    double A0;
    double sigma2;
    double B0;
} bqa_schedule;

/* p >= 2; C is the catalyst amplitude; chi in [0, 2*pi) rotates the driver
 * about z; h is the longitudinal field of the single-spin demo. */
typedef struct bqa_model_params {
    int p;
    double C;
    double chi;
    double h;
} bqa_model_params;

/* Coherent-state coordinates: theta in [0, pi], phi in [0, pi/2],
 * alpha and beta in [-pi, pi]. */
typedef struct bqa_angles {
    double theta;
    double phi;
    double alpha;
    double beta;
} bqa_angles;

typedef enum bqa_transition_kind {
    BQA_TRANSITION_NONE = 0,
    BQA_TRANSITION_FIRST_ORDER = 1,
    BQA_TRANSITION_SECOND_ORDER = 2,
    BQA_TRANSITION_FIRST_AND_SECOND = 3
} bqa_transition_kind;

typedef struct bqa_transition_report {
    int kind; /* bqa_transition_kind */
    int has_first;
    double s_first;
    double jump;
    int has_second;
    double s_second;
} bqa_transition_report;

/* Message describing the most recent failure on the calling thread. */
BQA_API const char* bqa_last_error(void);
BQA_API const char* bqa_version(void);

BQA_API bqa_status bqa_schedule_eval(const bqa_schedule* sched, double s,
                                     double* A, double* B);

/* Probabilities of (|+1>, |0>, |-1>) and energy of the instantaneous ground
 * state of -A(s) sx - B(s) sz^2 - h sz. */
BQA_API bqa_status bqa_single_spin_ground_state(const bqa_schedule* sched,
                                                double h, double s,
                                                double probs[3],
                                                double* energy);

/* Semiclassical potential per spin; the _ab variant takes raw driver and
 * detuning coefficients instead of a schedule point. */
BQA_API bqa_status bqa_potential(const bqa_schedule* sched,
                                 const bqa_model_params* params, double s,
                                 const bqa_angles* a, double* v);
BQA_API bqa_status bqa_potential_ab(double A, double B,
                                    const bqa_model_params* params,
                                    const bqa_angles* a, double* v);

/* Global minimum over the restricted angle domain. With chi = 0 the search
 * runs over (theta, phi) at alpha = beta = 0 unless full_search is nonzero.
 * hint may be NULL; when given it seeds an extra local refinement. */
BQA_API bqa_status bqa_minimize_potential(const bqa_schedule* sched,
                                          const bqa_model_params* params,
                                          double s, const bqa_angles* hint,
                                          int full_search,
                                          bqa_angles* angles_min,
                                          double* v_min);
BQA_API bqa_status bqa_minimize_potential_ab(double A, double B,
                                             const bqa_model_params* params,
                                             int full_search,
                                             bqa_angles* angles_min,
                                             double* v_min);

/* ---- order-parameter sweeps ---- */

typedef struct bqa_sweep_result bqa_sweep_result;

/* s_grid must be strictly increasing within [0, 1]. Each grid point keeps
 * the better of a fresh global minimization and a continuation seeded from
 * the previous point. */
BQA_API bqa_status bqa_sweep_run(const bqa_schedule* sched,
                                 const bqa_model_params* params,
                                 const double* s_grid, size_t n_points,
                                 int full_search, bqa_sweep_result** out);
BQA_API size_t bqa_sweep_size(const bqa_sweep_result* sweep);
BQA_API bqa_status bqa_sweep_point(const bqa_sweep_result* sweep, size_t i,
                                   double* s, bqa_angles* angles_min,
                                   double* m, double* v_min);
BQA_API void bqa_sweep_free(bqa_sweep_result* sweep);

/* First-order: first adjacent jump of m above jump_threshold. Second-order:
 * first departure of m from zero that is not itself a jump. Fails when the
 * grid spacing exceeds 1e-2. */
BQA_API bqa_status bqa_classify_transitions(const bqa_sweep_result* sweep,
                                            double jump_threshold,
                                            double onset_eps,
                                            bqa_transition_report* out);

/* ---- second-order locus and phase diagrams ---- */

/* A(theta) = 4 C sin^3(theta/2)/cos(theta/2) and the matching B(theta);
 * requires C > 0, chi = 0, and thetas strictly inside (0, pi). */
BQA_API bqa_status bqa_second_order_curve(const bqa_model_params* params,
                                          const double* thetas, size_t n,
                                          double* A_out, double* B_out);

typedef struct bqa_phase_ab bqa_phase_ab;

/* Order parameter over raw (A, B) coefficients; requires chi = 0. */
BQA_API bqa_status bqa_phase_diagram_ab(const bqa_model_params* params,
                                        const double* a_grid, size_t na,
                                        const double* b_grid, size_t nb,
                                        bqa_phase_ab** out);
BQA_API bqa_status bqa_phase_ab_cell(const bqa_phase_ab* diagram, size_t ia,
                                     size_t ib, bqa_angles* angles_min,
                                     double* m, double* v_min);
BQA_API void bqa_phase_ab_free(bqa_phase_ab* diagram);

typedef struct bqa_phase_sc bqa_phase_sc;

/* One sweep and classification per catalyst amplitude; records where the
 * first-order transition sits, when present. */
BQA_API bqa_status bqa_phase_diagram_sc(const bqa_schedule* sched, int p,
                                        const double* c_grid, size_t nc,
                                        double s_resolution, double s_min,
                                        double s_max, double jump_threshold,
                                        double onset_eps, bqa_phase_sc** out);
BQA_API bqa_status bqa_phase_sc_point(const bqa_phase_sc* diagram, size_t i,
                                      double* C, int* has_first,
                                      double* s_first, double* jump);
BQA_API void bqa_phase_sc_free(bqa_phase_sc* diagram);

/* ---- exact diagonalization in the symmetric subspace ---- */

typedef struct bqa_basis bqa_basis;

/* All |n1, n0, nm1> with n1+n0+nm1 = N, lexicographic in (n1, n0);
 * dimension (N+1)(N+2)/2. */
BQA_API bqa_status bqa_basis_create(int N, bqa_basis** out);
BQA_API size_t bqa_basis_dim(const bqa_basis* basis);
BQA_API bqa_status bqa_basis_state(const bqa_basis* basis, size_t i, int* n1,
                                   int* n0, int* nm1);
BQA_API void bqa_basis_free(bqa_basis* basis);

/* Dense column-major dim x dim image of the symmetric-subspace Hamiltonian;
 * requires chi = 0. */
BQA_API bqa_status bqa_build_hamiltonian_dense(const bqa_basis* basis,
                                               const bqa_schedule* sched,
                                               const bqa_model_params* params,
                                               double s, double* out);

/* Normalized ground-state coefficients (largest-|coefficient| positive) and
 * energy; residual contract ||H v - E v|| <= 1e-8 ||H||_F. */
BQA_API bqa_status bqa_exact_ground_state(const bqa_basis* basis,
                                          const bqa_schedule* sched,
                                          const bqa_model_params* params,
                                          double s, double* coeffs,
                                          double* energy);

/* Inner product with the coherent state at alpha = beta = 0. */
BQA_API bqa_status bqa_coherent_overlap(const bqa_basis* basis,
                                        const double* coeffs, double theta,
                                        double phi, double* overlap);

/* D = sqrt(1 - overlap^2) between the exact size-N ground state and the
 * coherent state at the semiclassical minimizing angles. */
BQA_API bqa_status bqa_trace_norm_distance(const bqa_schedule* sched,
                                           const bqa_model_params* params,
                                           double s, int N, double* D,
                                           double* overlap,
                                           double* energy_exact,
                                           double* v_min_sc,
                                           bqa_angles* angles_sc);

typedef struct bqa_trace_scan bqa_trace_scan;

/* Batched trace-distance evaluation over an s grid (basis and minimizer
 * tables are reused across points). */
BQA_API bqa_status bqa_trace_distance_scan(const bqa_schedule* sched,
                                           const bqa_model_params* params,
                                           const double* s_grid, size_t n,
                                           int N, bqa_trace_scan** out);
BQA_API size_t bqa_trace_scan_size(const bqa_trace_scan* scan);
BQA_API bqa_status bqa_trace_scan_point(const bqa_trace_scan* scan, size_t i,
                                        double* s, double* D, double* overlap,
                                        double* energy_exact,
                                        double* v_min_sc,
                                        bqa_angles* angles_sc);
BQA_API void bqa_trace_scan_free(bqa_trace_scan* scan);

#ifdef __cplusplus
}
#endif

#endif /* BQA_H */
