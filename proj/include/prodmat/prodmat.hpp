#pragma once

#include "prodmat/cfrac.hpp"
#include "prodmat/errors.hpp"
#include "prodmat/factorials.hpp"
#include "prodmat/functionals.hpp"
#include "prodmat/hessenberg.hpp"
#include "prodmat/models.hpp"
#include "prodmat/mop.hpp"
#include "prodmat/multipoly.hpp"
#include "prodmat/paths.hpp"
#include "prodmat/production.hpp"
#include "prodmat/rational.hpp"
#include "prodmat/ratfunc.hpp"
#include "prodmat/ring.hpp"
#include "prodmat/series.hpp"
#include "prodmat/unipoly.hpp"
#include "prodmat/windows.hpp"
