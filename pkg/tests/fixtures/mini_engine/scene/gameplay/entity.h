#pragma once
#include "core/object.h"

struct Entity {
    Object base;
    void tick(float dt);
};
