#include "qhall/version.hpp"

#include <cstdio>

int main() {
  std::printf("qhall %s\n", qhall::versionString());
  return 0;
}
