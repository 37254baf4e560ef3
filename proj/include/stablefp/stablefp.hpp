#pragma once

#include "stablefp/hitting_laws.hpp"
#include "stablefp/lamperti.hpp"
#include "stablefp/laplace_exponent.hpp"
#include "stablefp/monte_carlo.hpp"
#include "stablefp/quadrature.hpp"
#include "stablefp/rng.hpp"
#include "stablefp/special_functions.hpp"
#include "stablefp/stable_process.hpp"
#include "stablefp/version.hpp"
#include "stablefp/wiener_hopf.hpp"
