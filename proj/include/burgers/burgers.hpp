#pragma once

#include "burgers/asymptotics.hpp"
#include "burgers/benchmark.hpp"
#include "burgers/comparison.hpp"
#include "burgers/cubic.hpp"
#include "burgers/errors.hpp"
#include "burgers/exact_rational.hpp"
#include "burgers/fast_viscous.hpp"
#include "burgers/inviscid.hpp"
#include "burgers/params.hpp"
#include "burgers/polynomial.hpp"
#include "burgers/rational_core.hpp"
#include "burgers/special_functions.hpp"
#include "burgers/svg.hpp"
#include "burgers/table.hpp"
#include "burgers/verify.hpp"
#include "burgers/version.hpp"
