#pragma once

#include <cstdint>
#include <vector>

#include "qcrb/bounds.hpp"

namespace qcrb {

struct HolevoProgram {
    HermitianMatrix J;                 // m x m, Re J = I
    std::vector<RVector> d_vectors;    // d vectors of length m
    WeightMatrix G;                    // d x d

    void validate() const;
};

struct HolevoOptions {
    int restarts = 8;
    int max_restarts = 32;
    double tol = 1e-10;
    std::uint64_t seed = 0x5eed;
};

struct HolevoResult {
    double value;
    std::vector<RVector> argmin;
    int agreeing_restarts;
    int free_dims;
};

// tr(sqrt G Re Z sqrt G) + tr|sqrt G Im Z sqrt G| with Z^{kj} = <v^k|J|v^j>.
double holevo_objective(const HolevoProgram& prog, const std::vector<RVector>& v);

HolevoResult holevo_numeric(const HolevoProgram& prog, const HolevoOptions& opt = {});

// MSE matrix attaining the objective at v: Re Z + G^{-1/2} |sqrt G Im Z sqrt G| G^{-1/2}. Needs G > 0.
SymmetricMatrix holevo_mse(const HolevoProgram& prog, const std::vector<RVector>& v);

// RLD bound of the model obtained by restricting the extension to span{d_k}.
double projected_rld_bound(const HolevoProgram& prog);

HolevoProgram full_qubit_program(double r, const WeightMatrix& G);
HolevoProgram submodel_program(double r, double phi, const WeightMatrix& G);

}  // namespace qcrb
