#pragma once

#include "riesz/error.hpp"
#include "riesz/scalar.hpp"
#include "riesz/vector.hpp"
#include "riesz/matrix.hpp"
#include "riesz/feasibility.hpp"
#include "riesz/hom.hpp"
#include "riesz/system.hpp"
#include "riesz/system_io.hpp"
#include "riesz/colimit.hpp"
#include "riesz/limit.hpp"
#include "riesz/duality.hpp"
#include "riesz/random.hpp"
#include "riesz/carrier.hpp"
#include "riesz/suites.hpp"
#include "riesz/serialize.hpp"
