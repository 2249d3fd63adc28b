#pragma once

#include "qorder/catalog.hpp"
#include "qorder/circular.hpp"
#include "qorder/error.hpp"
#include "qorder/group.hpp"
#include "qorder/permutation.hpp"
#include "qorder/quandle.hpp"
#include "qorder/search.hpp"
#include "qorder/table.hpp"
