#pragma once

#include "asq/as_operad.hpp"
#include "asq/enumerate.hpp"
#include "asq/errors.hpp"
#include "asq/koszul.hpp"
#include "asq/matrix.hpp"
#include "asq/oracle.hpp"
#include "asq/poset.hpp"
#include "asq/presentation.hpp"
#include "asq/rational.hpp"
#include "asq/rewrite.hpp"
#include "asq/schroder.hpp"
#include "asq/serialize.hpp"
#include "asq/syntax_tree.hpp"
#include "asq/thin_forest.hpp"
#include "asq/tree_poly.hpp"
