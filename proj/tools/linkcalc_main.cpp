#include <cstdio>

int main() {
  std::puts("linkcalc: command line not wired up yet");
  return 2;
}
