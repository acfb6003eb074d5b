#pragma once

#include "latmod/classify.hpp"
#include "latmod/dot.hpp"
#include "latmod/element.hpp"
#include "latmod/error.hpp"
#include "latmod/expansion.hpp"
#include "latmod/generators.hpp"
#include "latmod/latspec.hpp"
#include "latmod/lattice.hpp"
#include "latmod/module.hpp"
#include "latmod/mul_lattice.hpp"
#include "latmod/search.hpp"
#include "latmod/validation.hpp"
#include "latmod/verify/context.hpp"
#include "latmod/verify/engine.hpp"
#include "latmod/verify/registry.hpp"
