#pragma once

#include "laby/error.hpp"
#include "laby/ring.hpp"
#include "laby/matrix.hpp"
#include "laby/arrows.hpp"
#include "laby/linalg.hpp"
#include "laby/subsets.hpp"
#include "laby/random.hpp"
#include "laby/limits.hpp"
#include "laby/functor.hpp"
#include "laby/nat.hpp"
#include "laby/crosseffects.hpp"
#include "laby/maze.hpp"
#include "laby/phi.hpp"
#include "laby/quadratic.hpp"
#include "laby/io.hpp"
#include "laby/suites.hpp"
