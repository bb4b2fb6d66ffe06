#pragma once

// Umbrella header.

#include "schur_div/bigint.hpp"
#include "schur_div/coloring.hpp"
#include "schur_div/coloring_spec.hpp"
#include "schur_div/errors.hpp"
#include "schur_div/multiplicative.hpp"
#include "schur_div/number_theory.hpp"
#include "schur_div/ramsey.hpp"
#include "schur_div/residues.hpp"
#include "schur_div/schur_search.hpp"
#include "schur_div/sequences.hpp"
#include "schur_div/unity_function.hpp"
