#ifndef IDEMKIT_IDEMKIT_HPP
#define IDEMKIT_IDEMKIT_HPP

#include "idemkit/errors.hpp"
#include "idemkit/number.hpp"
#include "idemkit/permutation.hpp"
#include "idemkit/group.hpp"
#include "idemkit/lattice.hpp"
#include "idemkit/burnside.hpp"
#include "idemkit/cyclotomic.hpp"
#include "idemkit/charfun.hpp"
#include "idemkit/chartable.hpp"
#include "idemkit/idempotents.hpp"
#include "idemkit/norms.hpp"
#include "idemkit/io.hpp"
#include "idemkit/verify.hpp"

#endif  // IDEMKIT_IDEMKIT_HPP
