#pragma once

#include <qes/common.hpp>

#include <map>
#include <string>

namespace qes::cli {

/// Parsed command configuration. parameters holds the per-family reals
/// (poschl-teller: L, A, q, alpha; sextic: L, b and a,q or qa2;
/// pt-anharmonic: b, ell and a,q or qa2). Half-integer j always travels as the
/// integer twoj.
struct RunConfig {
    std::string command;     // spectrum | polytable | wavefunction |
                             // transform-check | verify | bench-daniel
    std::string family;
    std::map<std::string, double> parameters;
    int twoj = 0;
    Precision precision = Precision::Double;
    std::string output_path; // empty: stdout
    std::string format = "json"; // json | csv

    // command extras
    std::string method = "roots";   // spectrum: roots | tridiagonal
    std::string transform = "half"; // transform-check: half | scarf | shift
    double a_scale = 0.5;
    double b_shift = 0.0;
    int root_index = 0;             // wavefunction: which spectral root
    double x_min = 0.0, x_max = 0.0; // 0,0: family defaults
    int n_samples = 201;
    int grid_n = 4001;
    int n_states = 3;
    std::string verify_mode = "auto"; // fd | residual | auto
};

/// Executes the command and writes the artifact (stdout or output_path).
/// Returns 0 on success, 1 on configuration/validation errors, 2 on numerical
/// failures (the error text also lands in the JSON "error" field).
int run(const RunConfig& config);

} // namespace qes::cli
