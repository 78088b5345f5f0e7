#pragma once

#include "primal/conormal.hpp"
#include "primal/derivation.hpp"
#include "primal/errors.hpp"
#include "primal/groebner.hpp"
#include "primal/ideal.hpp"
#include "primal/linecase.hpp"
#include "primal/matrix.hpp"
#include "primal/module.hpp"
#include "primal/monomial.hpp"
#include "primal/order.hpp"
#include "primal/parser.hpp"
#include "primal/polynomial.hpp"
#include "primal/primitive.hpp"
#include "primal/rational.hpp"
#include "primal/ring.hpp"
#include "primal/unipoly.hpp"
#include "primal/vecpoly.hpp"
