#pragma once

// everything except the CLI driver
#include "checks.hpp"
#include "constructions.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "field.hpp"
#include "hom.hpp"
#include "int_matrix.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "module_invariants.hpp"
#include "monomial_algebra.hpp"
#include "quiver.hpp"
#include "representation.hpp"
#include "resolution.hpp"
#include "sampling.hpp"
#include "skeleton.hpp"
#include "stable_model.hpp"
#include "syzygy.hpp"
