#pragma once

// Exact computation of K-ranks, McCoy ranks, K-Betti numbers, and their jump
// loci for matrices and chain complexes over Laurent polynomial group rings
// R[Z^s], with R the integers or the integers modulo n.

#include "jumploci/complex.hpp"
#include "jumploci/json_io.hpp"
#include "jumploci/lattice.hpp"
#include "jumploci/laurent.hpp"
#include "jumploci/locus.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/partition.hpp"
#include "jumploci/ring.hpp"
