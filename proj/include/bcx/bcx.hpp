#pragma once

// Umbrella header for the bicomplex linear algebra library.

#include "bcx/scalar.hpp"
#include "bcx/matrix.hpp"
#include "bcx/positivity.hpp"
#include "bcx/tensor.hpp"
#include "bcx/choi.hpp"
#include "bcx/dsp.hpp"
#include "bcx/json_io.hpp"
