#pragma once

#include "alhc/bijection.hpp"
#include "alhc/enumerate.hpp"
#include "alhc/identities.hpp"
#include "alhc/multisum.hpp"
#include "alhc/qseries.hpp"
#include "alhc/report_io.hpp"
#include "alhc/triangle.hpp"
