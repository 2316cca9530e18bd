#pragma once

// Umbrella header.

#include "liptree/exact_norm.hpp"
#include "liptree/expr.hpp"
#include "liptree/operator_analysis.hpp"
#include "liptree/report.hpp"
#include "liptree/rng.hpp"
#include "liptree/spaces.hpp"
#include "liptree/symbol.hpp"
#include "liptree/testfns.hpp"
#include "liptree/tree.hpp"
#include "liptree/verify.hpp"
#include "liptree/weights.hpp"
