#pragma once

#include "moonfill/error.hpp"
#include "moonfill/shapes.hpp"
#include "moonfill/perm.hpp"
#include "moonfill/pipedreams.hpp"
#include "moonfill/words.hpp"
#include "moonfill/paths.hpp"
#include "moonfill/polynomial.hpp"
#include "moonfill/triangulations.hpp"
#include "moonfill/algebra.hpp"
#include "moonfill/complex.hpp"
#include "moonfill/io.hpp"
