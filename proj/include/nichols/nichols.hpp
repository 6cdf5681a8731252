#pragma once

#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"
#include "nichols/cyclotomic.hpp"
#include "nichols/induced.hpp"
#include "nichols/matrix.hpp"
#include "nichols/permutation.hpp"
#include "nichols/sn_irrep.hpp"
#include "nichols/unmixed.hpp"
#include "nichols/verdict.hpp"
