#pragma once

// Bayesian habituation-to-novelty model: conjugate Gaussian updating with a
// learning rate, per-exposure information gain and its decay, Wundt-curve
// valence, and the growing range of acceptable prediction error.

#include "novelty/belief.hpp"
#include "novelty/dataset.hpp"
#include "novelty/dynamics.hpp"
#include "novelty/errors.hpp"
#include "novelty/experiments.hpp"
#include "novelty/gain.hpp"
#include "novelty/valence.hpp"
#include "novelty/verify.hpp"
