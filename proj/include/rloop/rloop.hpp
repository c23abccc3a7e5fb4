#pragma once

#include "rloop/caps.hpp"
#include "rloop/catalog.hpp"
#include "rloop/constructions.hpp"
#include "rloop/enumerate.hpp"
#include "rloop/error.hpp"
#include "rloop/extension.hpp"
#include "rloop/grouptable.hpp"
#include "rloop/innermaps.hpp"
#include "rloop/io.hpp"
#include "rloop/perm.hpp"
#include "rloop/permgroup.hpp"
#include "rloop/report.hpp"
#include "rloop/rightloop.hpp"
#include "rloop/twistedaut.hpp"
#include "rloop/twistedsub.hpp"
