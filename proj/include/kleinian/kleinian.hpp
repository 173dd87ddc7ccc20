#pragma once

#include "kleinian/appendix.hpp"
#include "kleinian/corner.hpp"
#include "kleinian/hilbert.hpp"
#include "kleinian/linalg.hpp"
#include "kleinian/mckay.hpp"
#include "kleinian/representation.hpp"
#include "kleinian/simplex.hpp"
#include "kleinian/stability.hpp"
