#pragma once

namespace axitomo {

/// Worker cap for parallel loops: AXITOMO_THREADS when set to a positive
/// integer, otherwise the OpenMP default (1 when built without OpenMP).
int worker_count();

}  // namespace axitomo
