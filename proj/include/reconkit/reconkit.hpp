#pragma once

#include "reconkit/canonical.hpp"
#include "reconkit/caterpillar.hpp"
#include "reconkit/deck.hpp"
#include "reconkit/families.hpp"
#include "reconkit/graph.hpp"
#include "reconkit/graph6.hpp"
#include "reconkit/recon.hpp"
#include "reconkit/store.hpp"
#include "reconkit/structure.hpp"
#include "reconkit/sweep.hpp"
