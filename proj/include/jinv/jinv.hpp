#pragma once

#include "jinv/errors.hpp"
#include "jinv/jprofile.hpp"
#include "jinv/motives.hpp"
#include "jinv/numeric.hpp"
#include "jinv/poly.hpp"
#include "jinv/profile_io.hpp"
#include "jinv/rootdata.hpp"
#include "jinv/splitting.hpp"
#include "jinv/typed.hpp"
