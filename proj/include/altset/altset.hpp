#pragma once

#include <altset/continuum.hpp>
#include <altset/errors.hpp>
#include <altset/expression.hpp>
#include <altset/hf_set.hpp>
#include <altset/horizon.hpp>
#include <altset/io.hpp>
#include <altset/motion.hpp>
#include <altset/omega_rational.hpp>
#include <altset/polynomial.hpp>
#include <altset/rational.hpp>
