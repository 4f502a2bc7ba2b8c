#pragma once

#include "mdk/algebra.hpp"
#include "mdk/diagvec.hpp"
#include "mdk/error.hpp"
#include "mdk/field.hpp"
#include "mdk/inverse.hpp"
#include "mdk/io.hpp"
#include "mdk/mdmatrix.hpp"
#include "mdk/oracle.hpp"
