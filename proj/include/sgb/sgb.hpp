#pragma once

#include "sgb/errors.hpp"
#include "sgb/euclid.hpp"
#include "sgb/monomial.hpp"
#include "sgb/polyvec.hpp"
#include "sgb/division.hpp"
#include "sgb/groebner.hpp"
#include "sgb/linsys.hpp"
#include "sgb/io.hpp"
