#include <cstdio>

int main() {
  std::puts("liesec: not yet wired");
  return 0;
}
