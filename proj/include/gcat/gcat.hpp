#pragma once

// Everything.

#include "gcat/audit.hpp"
#include "gcat/trace.hpp"
