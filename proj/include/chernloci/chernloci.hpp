#pragma once

// Everything except the JSON front end (chernloci/cli.hpp), which needs nlohmann/json.
#include "chernloci/error.hpp"
#include "chernloci/symbolic_ring.hpp"
#include "chernloci/operator_calculus.hpp"
#include "chernloci/triples.hpp"
#include "chernloci/class_formulas.hpp"
#include "chernloci/specialization.hpp"
#include "chernloci/identity_harness.hpp"
