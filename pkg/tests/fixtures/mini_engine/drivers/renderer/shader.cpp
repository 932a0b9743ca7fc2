#include "renderer.h"
#include "util/math.h"

void compile_shader() {}
