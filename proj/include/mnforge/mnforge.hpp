#pragma once

// Umbrella header: exact arithmetic in the multiquadratic tower, the ordered
// group and its twisted series algebra, finite quaternion-type
// specializations, the quaternion identity lab, the expression language, and
// the verification suites.

#include "mnforge/errors.hpp"
#include "mnforge/rational.hpp"
#include "mnforge/index_set.hpp"
#include "mnforge/primes.hpp"
#include "mnforge/field.hpp"
#include "mnforge/group.hpp"
#include "mnforge/linalg.hpp"
#include "mnforge/series.hpp"
#include "mnforge/algebra.hpp"
#include "mnforge/quaternion.hpp"
#include "mnforge/herstein.hpp"
#include "mnforge/random.hpp"
#include "mnforge/parse.hpp"
#include "mnforge/verify.hpp"
