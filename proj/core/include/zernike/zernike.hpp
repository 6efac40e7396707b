#ifndef ZERNIKE_ZERNIKE_HPP
#define ZERNIKE_ZERNIKE_HPP

#include "zernike/bbt.hpp"
#include "zernike/bench.hpp"
#include "zernike/errors.hpp"
#include "zernike/flops.hpp"
#include "zernike/legacy.hpp"
#include "zernike/power.hpp"
#include "zernike/radial_index.hpp"
#include "zernike/reference.hpp"

#endif
