#pragma once

#include "lhgeom/dynamics.hpp"
#include "lhgeom/error.hpp"
#include "lhgeom/export.hpp"
#include "lhgeom/expression.hpp"
#include "lhgeom/format.hpp"
#include "lhgeom/hamilton.hpp"
#include "lhgeom/kcc.hpp"
#include "lhgeom/lagrange.hpp"
#include "lhgeom/linalg.hpp"
#include "lhgeom/quadric.hpp"
#include "lhgeom/report.hpp"
#include "lhgeom/sweep.hpp"
#include "lhgeom/system_file.hpp"
#include "lhgeom/vector_field.hpp"
#include "lhgeom/version.hpp"
