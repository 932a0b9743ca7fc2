#pragma once
#include "core/object.h"

struct Skeleton {
    void solve_ik();
};
