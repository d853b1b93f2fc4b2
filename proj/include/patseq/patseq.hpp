#pragma once

// Generalized pattern sequences over base-b digit expansions: occurrence
// counting, the weighted-set algebra, window substitution, transfer-matrix
// block sums, and the exact decision procedure for the vanishing Cesaro mean.

#include "patseq/cyclotomic.hpp"
#include "patseq/digits.hpp"
#include "patseq/enumerate.hpp"
#include "patseq/numeric.hpp"
#include "patseq/partial_sums.hpp"
#include "patseq/spec_io.hpp"
#include "patseq/substitution.hpp"
#include "patseq/transfer.hpp"
#include "patseq/weighted_set.hpp"
