#pragma once

#include "taucrit/battery.hpp"
#include "taucrit/canonical.hpp"
#include "taucrit/cover.hpp"
#include "taucrit/degree_laws.hpp"
#include "taucrit/enumerate.hpp"
#include "taucrit/family.hpp"
#include "taucrit/graph.hpp"
#include "taucrit/graph6.hpp"
#include "taucrit/law_id.hpp"
#include "taucrit/law_report.hpp"
#include "taucrit/laws.hpp"
#include "taucrit/rational.hpp"
#include "taucrit/report.hpp"
#include "taucrit/spectral.hpp"
#include "taucrit/sweep.hpp"
