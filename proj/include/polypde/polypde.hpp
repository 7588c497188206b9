#ifndef POLYPDE_POLYPDE_HPP
#define POLYPDE_POLYPDE_HPP

#include "derivative_matrix.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "multi_index.hpp"
#include "parser.hpp"
#include "poly.hpp"
#include "render.hpp"
#include "scalar.hpp"
#include "serialize.hpp"
#include "solver.hpp"

#endif
