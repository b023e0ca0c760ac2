#pragma once

#include "s1redux/abelian_group.hpp"
#include "s1redux/classifying_space.hpp"
#include "s1redux/coset_enumeration.hpp"
#include "s1redux/error.hpp"
#include "s1redux/groupoid.hpp"
#include "s1redux/hilbert.hpp"
#include "s1redux/homotopy_value.hpp"
#include "s1redux/les.hpp"
#include "s1redux/lie_catalog.hpp"
#include "s1redux/momentum.hpp"
#include "s1redux/nerve.hpp"
#include "s1redux/obstruction.hpp"
#include "s1redux/serialize.hpp"
#include "s1redux/smith.hpp"
#include "s1redux/sphere_table.hpp"
#include "s1redux/verdict.hpp"
#include "s1redux/weights.hpp"
