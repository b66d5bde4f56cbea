#pragma once

#include "msym/analytic.hpp"
#include "msym/brjuno.hpp"
#include "msym/chain.hpp"
#include "msym/contfrac.hpp"
#include "msym/cpow.hpp"
#include "msym/cuspform.hpp"
#include "msym/hecke.hpp"
#include "msym/hurwitz.hpp"
#include "msym/json_io.hpp"
#include "msym/levy.hpp"
#include "msym/matrix2.hpp"
#include "msym/period_like.hpp"
#include "msym/pseudo_measure.hpp"
#include "msym/quadrature.hpp"
#include "msym/rational.hpp"
#include "msym/spectral.hpp"
#include "msym/transfer.hpp"
