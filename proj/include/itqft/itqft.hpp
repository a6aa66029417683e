#pragma once

#include "itqft/cyclotomic.hpp"
#include "itqft/fp_rep.hpp"
#include "itqft/hadic.hpp"
#include "itqft/identities.hpp"
#include "itqft/prime.hpp"
#include "itqft/qint.hpp"
#include "itqft/rep.hpp"
#include "itqft/skein_poly.hpp"
#include "itqft/verify.hpp"
