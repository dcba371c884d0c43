#pragma once

// Umbrella header for the hypergraph product library.

#include "hgprod/checker.hpp"
#include "hgprod/counting.hpp"
#include "hgprod/enumerate.hpp"
#include "hgprod/hg_format.hpp"
#include "hgprod/hypergraph.hpp"
#include "hgprod/iso.hpp"
#include "hgprod/label.hpp"
#include "hgprod/products.hpp"
