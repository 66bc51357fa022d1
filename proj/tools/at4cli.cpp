#include <cstdio>
#include <string>
#include <vector>

#include "at4/report.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string out;
  int code = at4::cli_main(args, out);
  std::fputs(out.c_str(), stdout);
  return code;
}
