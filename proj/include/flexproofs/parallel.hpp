#pragma once

namespace flexproofs {

/// Upper bound on worker threads used inside library calls.
void set_num_threads(int n);
int num_threads();

}  // namespace flexproofs
