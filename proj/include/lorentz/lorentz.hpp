#pragma once

#include "lorentz/derived.hpp"
#include "lorentz/dual.hpp"
#include "lorentz/exponent.hpp"
#include "lorentz/geometry.hpp"
#include "lorentz/io.hpp"
#include "lorentz/lorentzian.hpp"
#include "lorentz/polynomial.hpp"
#include "lorentz/quadratic_form.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/symfunc.hpp"
#include "lorentz/witness.hpp"
