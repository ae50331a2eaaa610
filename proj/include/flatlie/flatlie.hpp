#pragma once

#include "flatlie/rational.hpp"
#include "flatlie/matrix.hpp"
#include "flatlie/subspace.hpp"
#include "flatlie/forms.hpp"
#include "flatlie/lie_algebra.hpp"
#include "flatlie/metric.hpp"
#include "flatlie/structure.hpp"
#include "flatlie/geodesics.hpp"
#include "flatlie/class_c.hpp"
#include "flatlie/catalog.hpp"
#include "flatlie/random_instances.hpp"
#include "flatlie/document.hpp"
#include "flatlie/report.hpp"
