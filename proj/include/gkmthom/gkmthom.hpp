#pragma once

#include "gkmthom/builders.hpp"
#include "gkmthom/checks.hpp"
#include "gkmthom/cohomology.hpp"
#include "gkmthom/cross_section.hpp"
#include "gkmthom/graph.hpp"
#include "gkmthom/graph_io.hpp"
#include "gkmthom/interpolation.hpp"
#include "gkmthom/linear_form.hpp"
#include "gkmthom/parallel.hpp"
#include "gkmthom/parse.hpp"
#include "gkmthom/polarization.hpp"
#include "gkmthom/polynomial.hpp"
#include "gkmthom/rational.hpp"
#include "gkmthom/rational_expr.hpp"
#include "gkmthom/render.hpp"
#include "gkmthom/thom.hpp"
