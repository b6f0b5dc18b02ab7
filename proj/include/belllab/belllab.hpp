#ifndef BELLLAB_BELLLAB_HPP
#define BELLLAB_BELLLAB_HPP

// Umbrella header: exact finite probability spaces, the qubit spin family,
// inequality checks and scans, joint-distribution feasibility, and the
// sequential measurement simulator.

#include "belllab/errors.hpp"
#include "belllab/feasibility.hpp"
#include "belllab/inequality.hpp"
#include "belllab/measurement.hpp"
#include "belllab/prob_space.hpp"
#include "belllab/qubit.hpp"
#include "belllab/rational.hpp"

#endif  // BELLLAB_BELLLAB_HPP
