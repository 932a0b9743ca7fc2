#pragma once
#include "core/util/math.h"
#include "drivers/renderer/renderer.h"

struct Particles {
    int count;
};
