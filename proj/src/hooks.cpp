#include "flexproofs/hooks.hpp"

namespace flexproofs::testing {

Hooks& hooks() {
  static Hooks h;
  return h;
}

}  // namespace flexproofs::testing
