#pragma once

#include "quasichar/arith.hpp"
#include "quasichar/charquasi.hpp"
#include "quasichar/errors.hpp"
#include "quasichar/intmat.hpp"
#include "quasichar/io.hpp"
#include "quasichar/layers.hpp"
#include "quasichar/modstruct.hpp"
#include "quasichar/oracle.hpp"
#include "quasichar/period.hpp"
#include "quasichar/quasipoly.hpp"
#include "quasichar/ring.hpp"
#include "quasichar/rootsys.hpp"
