#pragma once

#include "dualsym/biequivalence.hpp"
#include "dualsym/enumeration.hpp"
#include "dualsym/generators.hpp"
#include "dualsym/inverse.hpp"
#include "dualsym/json_io.hpp"
#include "dualsym/morphisms.hpp"
#include "dualsym/partial_injection.hpp"
#include "dualsym/partition.hpp"
#include "dualsym/permutation.hpp"
#include "dualsym/random.hpp"
#include "dualsym/representation.hpp"
