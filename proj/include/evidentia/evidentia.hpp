/*
 * Umbrella header: evidence theory over frames with overlapping
 * possibilities: bodies of evidence, Dempster-Shafer and open-world
 * (TBM) combination, Belief/Plausibility in three regimes, a
 * generalized entropy functional, and a genetic-code decoding simulator
 * with an entropy-descent evolution loop.
 */

#pragma once

#include "errors.hpp"
#include "numeric.hpp"
#include "subset.hpp"
#include "frame.hpp"
#include "body.hpp"
#include "transform.hpp"
#include "fusion.hpp"
#include "evaluation.hpp"
#include "entropy.hpp"
#include "genetic_code.hpp"
#include "json_io.hpp"
#include "csv_io.hpp"
