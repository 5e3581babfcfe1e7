#pragma once

// Every public header of the library.

#include "anacomb/numeric.hpp"
#include "anacomb/polynomial.hpp"
#include "anacomb/jet.hpp"
#include "anacomb/series/distribution.hpp"
#include "anacomb/series/io.hpp"
#include "anacomb/series/numeric_series.hpp"
#include "anacomb/series/ops.hpp"
#include "anacomb/series/recursive.hpp"
#include "anacomb/series/ring.hpp"
#include "anacomb/series/series.hpp"
#include "anacomb/series/solvers.hpp"
#include "anacomb/specdsl/ast.hpp"
#include "anacomb/specdsl/compile.hpp"
#include "anacomb/specdsl/parser.hpp"
#include "anacomb/specdsl/printer.hpp"
#include "anacomb/specdsl/validate.hpp"
#include "anacomb/singular/estimate.hpp"
#include "anacomb/singular/locate.hpp"
#include "anacomb/singular/scale.hpp"
#include "anacomb/singular/simple_variety.hpp"
#include "anacomb/limitlaw/factors.hpp"
#include "anacomb/limitlaw/gaussian.hpp"
#include "anacomb/limitlaw/height.hpp"
#include "anacomb/limitlaw/noncrossing.hpp"
#include "anacomb/limitlaw/pattern.hpp"
#include "anacomb/limitlaw/quasi_powers.hpp"
#include "anacomb/workbench/analyze.hpp"
#include "anacomb/workbench/corpus.hpp"
#include "anacomb/workbench/report.hpp"
