#pragma once

#include "greenring/adams.hpp"
#include "greenring/context.hpp"
#include "greenring/decompose.hpp"
#include "greenring/element.hpp"
#include "greenring/error.hpp"
#include "greenring/gfp_matrix.hpp"
#include "greenring/polynomial.hpp"
#include "greenring/powers.hpp"
#include "greenring/product_table.hpp"
#include "greenring/serialize.hpp"
#include "greenring/verify.hpp"
