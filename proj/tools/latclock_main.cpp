#include "latclock/cli.hpp"

int main(int argc, char** argv) {
  return latclock::run_cli(argc, argv);
}
