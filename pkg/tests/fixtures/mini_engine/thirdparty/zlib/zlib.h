#pragma once

typedef struct z_stream_s { int avail_in; } z_stream;
