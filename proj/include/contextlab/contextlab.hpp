#pragma once

#include "contextlab/rational.hpp"
#include "contextlab/linalg.hpp"
#include "contextlab/hypergraph.hpp"
#include "contextlab/enumeration.hpp"
#include "contextlab/quantum.hpp"
