#pragma once

#include "bigint.hpp"
#include "catalog.hpp"
#include "error.hpp"
#include "finite_field.hpp"
#include "group_file.hpp"
#include "homogeneity.hpp"
#include "orbit.hpp"
#include "partitions.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "semigroup.hpp"
#include "sn_pairs.hpp"
#include "transformation.hpp"
#include "validation.hpp"
