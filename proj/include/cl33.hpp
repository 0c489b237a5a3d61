#pragma once

#include "cl33/algebra.hpp"
#include "cl33/errors.hpp"
#include "cl33/euclid.hpp"
#include "cl33/hodge.hpp"
#include "cl33/projective.hpp"
#include "cl33/transform.hpp"
#include "cl33/versors.hpp"
