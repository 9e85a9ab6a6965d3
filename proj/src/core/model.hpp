#ifndef BQA_CORE_MODEL_HPP
#define BQA_CORE_MODEL_HPP

namespace bqa {

// Problem definition: ferromagnetic p-spin interaction plus the spin-1
// two-photon-like catalyst of amplitude C, an optional rotation chi of the
// driver about the z axis, and a longitudinal field h for the single-spin
// bifurcation demo.
struct ModelParams {
    int p = 5;         // p-spin exponent, integer >= 2
    double C = 0.0;    // catalyst amplitude; > 0 breaks stoquasticity
    double chi = 0.0;  // driver rotation angle in [0, 2*pi)
    double h = 0.0;    // longitudinal field (single-spin use only)
};

// Throws std::invalid_argument on p < 2 or chi outside [0, 2*pi).
void validate(const ModelParams& params);

}  // namespace bqa

#endif
