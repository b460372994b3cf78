#pragma once

#include "sctop/catalog.hpp"
#include "sctop/completion.hpp"
#include "sctop/dot.hpp"
#include "sctop/dsl.hpp"
#include "sctop/enumerate.hpp"
#include "sctop/error.hpp"
#include "sctop/io.hpp"
#include "sctop/maps.hpp"
#include "sctop/order.hpp"
#include "sctop/space.hpp"
#include "sctop/subset.hpp"
#include "sctop/verify.hpp"
