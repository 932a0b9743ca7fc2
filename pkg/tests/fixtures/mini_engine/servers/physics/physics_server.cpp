#include "physics_server.h"
#include "core/util/math.h"

void PhysicsServer::step(float dt) {}
