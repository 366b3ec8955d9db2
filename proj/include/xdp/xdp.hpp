#pragma once

#include "xdp/checked.hpp"
#include "xdp/codec.hpp"
#include "xdp/cs_analysis.hpp"
#include "xdp/error.hpp"
#include "xdp/hypermatrix.hpp"
#include "xdp/matrix.hpp"
#include "xdp/projection.hpp"
#include "xdp/stp.hpp"
#include "xdp/xspace.hpp"
