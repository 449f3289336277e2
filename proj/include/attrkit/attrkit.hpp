#pragma once

#include <attrkit/rational.hpp>
#include <attrkit/geometry.hpp>
#include <attrkit/presets.hpp>
#include <attrkit/chern.hpp>
#include <attrkit/pushforward.hpp>
#include <attrkit/bounds.hpp>
#include <attrkit/attractor.hpp>
#include <attrkit/minimize.hpp>
#include <attrkit/boundstates.hpp>
#include <attrkit/catalog.hpp>
#include <attrkit/io.hpp>
#include <attrkit/check.hpp>
