#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "flexproofs/algebra.hpp"

int main(int argc, char** argv) {
  flexproofs::BilinearCtx::get();
  doctest::Context ctx(argc, argv);
  return ctx.run();
}
