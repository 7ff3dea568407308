#pragma once

#include "checks.hpp"
#include "constants.hpp"
#include "cut_project.hpp"
#include "errors.hpp"
#include "frame.hpp"
#include "half_int_vector.hpp"
#include "hull.hpp"
#include "io.hpp"
#include "signed_permutation.hpp"
#include "voronoi.hpp"
#include "weyl.hpp"
