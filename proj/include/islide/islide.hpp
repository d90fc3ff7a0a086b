#pragma once

#include "islide/canonical.hpp"
#include "islide/constructions.hpp"
#include "islide/domination.hpp"
#include "islide/errors.hpp"
#include "islide/families.hpp"
#include "islide/graph.hpp"
#include "islide/graph6.hpp"
#include "islide/igraph.hpp"
#include "islide/recipe.hpp"
#include "islide/search.hpp"
#include "islide/serialize.hpp"
#include "islide/structure.hpp"
#include "islide/vertex_set.hpp"
