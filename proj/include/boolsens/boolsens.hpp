#pragma once

#include "bit_table.hpp"
#include "boolean_function.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "expression.hpp"
#include "hypercube.hpp"
#include "json_format.hpp"
#include "measures/approx_degree.hpp"
#include "measures/block_sensitivity.hpp"
#include "measures/caps.hpp"
#include "measures/certificate.hpp"
#include "measures/decision_tree.hpp"
#include "measures/degree.hpp"
#include "measures/fourier.hpp"
#include "measures/report.hpp"
#include "measures/sensitivity.hpp"
#include "measures/symmetrize.hpp"
#include "multilinear.hpp"
#include "spectral.hpp"
#include "truth_table_io.hpp"
#include "verifier.hpp"
