#include "hud.h"
#include "scene/gameplay/entity.h"

void Hud::draw_overlay() {}
