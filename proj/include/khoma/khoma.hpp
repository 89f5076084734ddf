#pragma once

#include "khoma/error.hpp"
#include "khoma/fixtures.hpp"
#include "khoma/format.hpp"
#include "khoma/frobenius.hpp"
#include "khoma/graph.hpp"
#include "khoma/homology.hpp"
#include "khoma/invariants.hpp"
#include "khoma/khcomplex.hpp"
#include "khoma/lee.hpp"
#include "khoma/linkdiag.hpp"
#include "khoma/parallel.hpp"
#include "khoma/planar.hpp"
#include "khoma/polynomial.hpp"
#include "khoma/reidemeister.hpp"
#include "khoma/rings.hpp"
#include "khoma/sparse.hpp"
