#ifndef SU11_SU11_HPP
#define SU11_SU11_HPP

#include "su11/errors.hpp"
#include "su11/figures.hpp"
#include "su11/fock_operators.hpp"
#include "su11/io.hpp"
#include "su11/photon_statistics.hpp"
#include "su11/quadrature.hpp"
#include "su11/quantization.hpp"
#include "su11/special_functions.hpp"
#include "su11/squeezing.hpp"
#include "su11/states.hpp"
#include "su11/verify.hpp"

#endif
