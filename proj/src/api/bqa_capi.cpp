#include "bqa.h"

#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "../core/basis.hpp"
#include "../core/coherent.hpp"
#include "../core/eigs.hpp"
#include "../core/hamiltonian.hpp"
#include "../core/minimize.hpp"
#include "../core/potential.hpp"
#include "../core/schedule.hpp"
#include "../core/spin1.hpp"
#include "../core/sweep.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
bqa_status guarded(Fn&& fn) {
    try {
        fn();
        return BQA_OK;
    } catch (const bqa::ConvergenceError& e) {
        g_last_error = e.what();
        return BQA_ERR_CONVERGENCE;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return BQA_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return BQA_ERR_INVALID_ARG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BQA_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return BQA_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

bqa::Schedule to_core(const bqa_schedule& s) { return {s.A0, s.sigma2, s.B0}; }

bqa::ModelParams to_core(const bqa_model_params& p) {
    return {p.p, p.C, p.chi, p.h};
}

bqa::Angles to_core(const bqa_angles& a) {
    return {a.theta, a.phi, a.alpha, a.beta};
}

bqa_angles from_core(const bqa::Angles& a) {
    return {a.theta, a.phi, a.alpha, a.beta};
}

void fill_report(const bqa::TransitionReport& rep, bqa_transition_report* out) {
    out->kind = static_cast<int>(rep.kind);
    out->has_first = rep.s_first.has_value() ? 1 : 0;
    out->s_first = rep.s_first.value_or(0.0);
    out->jump = rep.jump;
    out->has_second = rep.s_second.has_value() ? 1 : 0;
    out->s_second = rep.s_second.value_or(0.0);
}

}  // namespace

struct bqa_sweep_result {
    bqa::SweepResult data;
};
struct bqa_phase_ab {
    bqa::PhaseDiagramAB data;
};
struct bqa_phase_sc {
    std::vector<bqa::PhaseScPoint> data;
};
struct bqa_basis {
    bqa::SymmetricBasis data;
};
struct bqa_trace_scan {
    std::vector<double> s;
    std::vector<bqa::TraceDistanceResult> data;
};

extern "C" {

const char* bqa_last_error(void) { return g_last_error.c_str(); }

const char* bqa_version(void) { return "0.1.0"; }

bqa_status bqa_schedule_eval(const bqa_schedule* sched, double s, double* A,
                             double* B) {
    return guarded([&] {
        require(sched && A && B, "bqa_schedule_eval: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        bqa::validate(sc);
        const bqa::ScheduleValue v = bqa::schedule_eval(sc, s);
        *A = v.A;
        *B = v.B;
    });
}

bqa_status bqa_single_spin_ground_state(const bqa_schedule* sched, double h,
                                        double s, double probs[3],
                                        double* energy) {
    return guarded([&] {
        require(sched && probs && energy,
                "bqa_single_spin_ground_state: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        bqa::validate(sc);
        const bqa::SingleSpinGroundState gs =
            bqa::single_spin_ground_state(sc, h, s);
        probs[0] = gs.probs[0];
        probs[1] = gs.probs[1];
        probs[2] = gs.probs[2];
        *energy = gs.energy;
    });
}

bqa_status bqa_potential(const bqa_schedule* sched,
                         const bqa_model_params* params, double s,
                         const bqa_angles* a, double* v) {
    return guarded([&] {
        require(sched && params && a && v, "bqa_potential: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        bqa::validate(sc);
        const bqa::ModelParams mp = to_core(*params);
        bqa::validate(mp);
        *v = bqa::potential(sc, mp, s, to_core(*a));
    });
}

bqa_status bqa_potential_ab(double A, double B, const bqa_model_params* params,
                            const bqa_angles* a, double* v) {
    return guarded([&] {
        require(params && a && v, "bqa_potential_ab: null pointer");
        const bqa::ModelParams mp = to_core(*params);
        bqa::validate(mp);
        const bqa::Angles ang = to_core(*a);
        bqa::validate(ang);
        *v = bqa::potential_ab(A, B, mp, ang);
    });
}

bqa_status bqa_minimize_potential(const bqa_schedule* sched,
                                  const bqa_model_params* params, double s,
                                  const bqa_angles* hint, int full_search,
                                  bqa_angles* angles_min, double* v_min) {
    return guarded([&] {
        require(sched && params && angles_min && v_min,
                "bqa_minimize_potential: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        bqa::validate(sc);
        const bqa::ModelParams mp = to_core(*params);
        bqa::MinimizeOptions opt;
        opt.force_full_search = full_search != 0;
        bqa::Angles h;
        const bqa::Angles* hp = nullptr;
        if (hint != nullptr) {
            h = to_core(*hint);
            hp = &h;
        }
        const bqa::MinimizeResult r =
            bqa::minimize_potential(sc, mp, s, hp, opt);
        *angles_min = from_core(r.angles);
        *v_min = r.v_min;
    });
}

bqa_status bqa_minimize_potential_ab(double A, double B,
                                     const bqa_model_params* params,
                                     int full_search, bqa_angles* angles_min,
                                     double* v_min) {
    return guarded([&] {
        require(params && angles_min && v_min,
                "bqa_minimize_potential_ab: null pointer");
        const bqa::ModelParams mp = to_core(*params);
        bqa::MinimizeOptions opt;
        opt.force_full_search = full_search != 0;
        const bqa::MinimizeResult r =
            bqa::minimize_potential_ab(A, B, mp, nullptr, opt);
        *angles_min = from_core(r.angles);
        *v_min = r.v_min;
    });
}

bqa_status bqa_sweep_run(const bqa_schedule* sched,
                         const bqa_model_params* params, const double* s_grid,
                         size_t n_points, int full_search,
                         bqa_sweep_result** out) {
    return guarded([&] {
        require(sched && params && s_grid && out,
                "bqa_sweep_run: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        const bqa::ModelParams mp = to_core(*params);
        bqa::MinimizeOptions opt;
        opt.force_full_search = full_search != 0;
        std::vector<double> grid(s_grid, s_grid + n_points);
        auto* handle = new bqa_sweep_result{bqa::sweep(sc, mp, grid, opt)};
        *out = handle;
    });
}

size_t bqa_sweep_size(const bqa_sweep_result* sweep) {
    return sweep ? sweep->data.size() : 0;
}

bqa_status bqa_sweep_point(const bqa_sweep_result* sweep, size_t i, double* s,
                           bqa_angles* angles_min, double* m, double* v_min) {
    return guarded([&] {
        require(sweep != nullptr, "bqa_sweep_point: null handle");
        require(i < sweep->data.size(), "bqa_sweep_point: index out of range");
        if (s) *s = sweep->data.s[i];
        if (angles_min) *angles_min = from_core(sweep->data.angles_min[i]);
        if (m) *m = sweep->data.m[i];
        if (v_min) *v_min = sweep->data.v_min[i];
    });
}

void bqa_sweep_free(bqa_sweep_result* sweep) { delete sweep; }

bqa_status bqa_classify_transitions(const bqa_sweep_result* sweep,
                                    double jump_threshold, double onset_eps,
                                    bqa_transition_report* out) {
    return guarded([&] {
        require(sweep && out, "bqa_classify_transitions: null pointer");
        fill_report(
            bqa::classify_transitions(sweep->data, jump_threshold, onset_eps),
            out);
    });
}

bqa_status bqa_second_order_curve(const bqa_model_params* params,
                                  const double* thetas, size_t n,
                                  double* A_out, double* B_out) {
    return guarded([&] {
        require(params && thetas && A_out && B_out,
                "bqa_second_order_curve: null pointer");
        const bqa::ModelParams mp = to_core(*params);
        std::vector<double> grid(thetas, thetas + n);
        const auto curve = bqa::second_order_curve(mp, grid);
        for (size_t i = 0; i < curve.size(); ++i) {
            A_out[i] = curve[i].A;
            B_out[i] = curve[i].B;
        }
    });
}

bqa_status bqa_phase_diagram_ab(const bqa_model_params* params,
                                const double* a_grid, size_t na,
                                const double* b_grid, size_t nb,
                                bqa_phase_ab** out) {
    return guarded([&] {
        require(params && a_grid && b_grid && out,
                "bqa_phase_diagram_ab: null pointer");
        require(na > 0 && nb > 0, "bqa_phase_diagram_ab: empty grid");
        const bqa::ModelParams mp = to_core(*params);
        std::vector<double> av(a_grid, a_grid + na);
        std::vector<double> bv(b_grid, b_grid + nb);
        *out = new bqa_phase_ab{bqa::phase_diagram_ab(mp, av, bv)};
    });
}

bqa_status bqa_phase_ab_cell(const bqa_phase_ab* diagram, size_t ia, size_t ib,
                             bqa_angles* angles_min, double* m,
                             double* v_min) {
    return guarded([&] {
        require(diagram != nullptr, "bqa_phase_ab_cell: null handle");
        require(ia < diagram->data.a_grid.size() &&
                    ib < diagram->data.b_grid.size(),
                "bqa_phase_ab_cell: index out of range");
        const bqa::MinimizeResult& r = diagram->data.at(ia, ib);
        if (angles_min) *angles_min = from_core(r.angles);
        if (m) *m = bqa::order_parameter(r.angles);
        if (v_min) *v_min = r.v_min;
    });
}

void bqa_phase_ab_free(bqa_phase_ab* diagram) { delete diagram; }

bqa_status bqa_phase_diagram_sc(const bqa_schedule* sched, int p,
                                const double* c_grid, size_t nc,
                                double s_resolution, double s_min,
                                double s_max, double jump_threshold,
                                double onset_eps, bqa_phase_sc** out) {
    return guarded([&] {
        require(sched && c_grid && out, "bqa_phase_diagram_sc: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        std::vector<double> cv(c_grid, c_grid + nc);
        *out = new bqa_phase_sc{
            bqa::phase_diagram_sc(sc, p, cv, s_resolution, s_min, s_max,
                                  jump_threshold, onset_eps)};
    });
}

bqa_status bqa_phase_sc_point(const bqa_phase_sc* diagram, size_t i, double* C,
                              int* has_first, double* s_first, double* jump) {
    return guarded([&] {
        require(diagram != nullptr, "bqa_phase_sc_point: null handle");
        require(i < diagram->data.size(),
                "bqa_phase_sc_point: index out of range");
        const bqa::PhaseScPoint& pt = diagram->data[i];
        if (C) *C = pt.C;
        if (has_first) *has_first = pt.s_first.has_value() ? 1 : 0;
        if (s_first) *s_first = pt.s_first.value_or(0.0);
        if (jump) *jump = pt.jump;
    });
}

void bqa_phase_sc_free(bqa_phase_sc* diagram) { delete diagram; }

bqa_status bqa_basis_create(int N, bqa_basis** out) {
    return guarded([&] {
        require(out != nullptr, "bqa_basis_create: null pointer");
        *out = new bqa_basis{bqa::SymmetricBasis(N)};
    });
}

size_t bqa_basis_dim(const bqa_basis* basis) {
    return basis ? basis->data.dim() : 0;
}

bqa_status bqa_basis_state(const bqa_basis* basis, size_t i, int* n1, int* n0,
                           int* nm1) {
    return guarded([&] {
        require(basis != nullptr, "bqa_basis_state: null handle");
        require(i < basis->data.dim(), "bqa_basis_state: index out of range");
        const bqa::BasisState st = basis->data.state(i);
        if (n1) *n1 = st.n1;
        if (n0) *n0 = st.n0;
        if (nm1) *nm1 = st.nm1;
    });
}

void bqa_basis_free(bqa_basis* basis) { delete basis; }

bqa_status bqa_build_hamiltonian_dense(const bqa_basis* basis,
                                       const bqa_schedule* sched,
                                       const bqa_model_params* params,
                                       double s, double* out) {
    return guarded([&] {
        require(basis && sched && params && out,
                "bqa_build_hamiltonian_dense: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        bqa::validate(sc);
        const bqa::SymmetricHamiltonian h = bqa::build_hamiltonian(
            basis->data, sc, to_core(*params), s);
        const std::vector<double> dense = h.to_dense();
        std::memcpy(out, dense.data(), dense.size() * sizeof(double));
    });
}

bqa_status bqa_exact_ground_state(const bqa_basis* basis,
                                  const bqa_schedule* sched,
                                  const bqa_model_params* params, double s,
                                  double* coeffs, double* energy) {
    return guarded([&] {
        require(basis && sched && params && coeffs && energy,
                "bqa_exact_ground_state: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        bqa::validate(sc);
        const bqa::SymmetricHamiltonian h = bqa::build_hamiltonian(
            basis->data, sc, to_core(*params), s);
        const bqa::GroundState gs = bqa::ground_state(h);
        std::memcpy(coeffs, gs.coeffs.data(),
                    gs.coeffs.size() * sizeof(double));
        *energy = gs.energy;
    });
}

bqa_status bqa_coherent_overlap(const bqa_basis* basis, const double* coeffs,
                                double theta, double phi, double* overlap) {
    return guarded([&] {
        require(basis && coeffs && overlap,
                "bqa_coherent_overlap: null pointer");
        std::vector<double> c(coeffs, coeffs + basis->data.dim());
        *overlap = bqa::coherent_overlap(basis->data, c, theta, phi);
    });
}

bqa_status bqa_trace_norm_distance(const bqa_schedule* sched,
                                   const bqa_model_params* params, double s,
                                   int N, double* D, double* overlap,
                                   double* energy_exact, double* v_min_sc,
                                   bqa_angles* angles_sc) {
    return guarded([&] {
        require(sched && params && D, "bqa_trace_norm_distance: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        bqa::validate(sc);
        const bqa::TraceDistanceResult r =
            bqa::trace_norm_distance(sc, to_core(*params), s, N);
        *D = r.D;
        if (overlap) *overlap = r.overlap;
        if (energy_exact) *energy_exact = r.energy_exact;
        if (v_min_sc) *v_min_sc = r.v_min_sc;
        if (angles_sc) *angles_sc = from_core(r.angles_sc);
    });
}

bqa_status bqa_trace_distance_scan(const bqa_schedule* sched,
                                   const bqa_model_params* params,
                                   const double* s_grid, size_t n, int N,
                                   bqa_trace_scan** out) {
    return guarded([&] {
        require(sched && params && s_grid && out,
                "bqa_trace_distance_scan: null pointer");
        const bqa::Schedule sc = to_core(*sched);
        bqa::validate(sc);
        std::vector<double> grid(s_grid, s_grid + n);
        auto* handle = new bqa_trace_scan;
        handle->s = grid;
        handle->data =
            bqa::trace_distance_scan(sc, to_core(*params), grid, N);
        *out = handle;
    });
}

size_t bqa_trace_scan_size(const bqa_trace_scan* scan) {
    return scan ? scan->data.size() : 0;
}

bqa_status bqa_trace_scan_point(const bqa_trace_scan* scan, size_t i,
                                double* s, double* D, double* overlap,
                                double* energy_exact, double* v_min_sc,
                                bqa_angles* angles_sc) {
    return guarded([&] {
        require(scan != nullptr, "bqa_trace_scan_point: null handle");
        require(i < scan->data.size(),
                "bqa_trace_scan_point: index out of range");
        const bqa::TraceDistanceResult& r = scan->data[i];
        if (s) *s = scan->s[i];
        if (D) *D = r.D;
        if (overlap) *overlap = r.overlap;
        if (energy_exact) *energy_exact = r.energy_exact;
        if (v_min_sc) *v_min_sc = r.v_min_sc;
        if (angles_sc) *angles_sc = from_core(r.angles_sc);
    });
}

void bqa_trace_scan_free(bqa_trace_scan* scan) { delete scan; }

}  // extern "C"
