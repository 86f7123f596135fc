#ifndef HYBRID_HYBRID_HPP
#define HYBRID_HYBRID_HPP

#include "hybrid/binet.hpp"
#include "hybrid/errors.hpp"
#include "hybrid/genfunc.hpp"
#include "hybrid/grid.hpp"
#include "hybrid/hybrid_number.hpp"
#include "hybrid/identities.hpp"
#include "hybrid/quad_ext.hpp"
#include "hybrid/rational.hpp"
#include "hybrid/sequences.hpp"

#endif  // HYBRID_HYBRID_HPP
