#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>

// Path to the icg binary, handed over as the last command line argument.
std::string g_icg_binary;

int main(int argc, char** argv) {
  int doctest_argc = argc;
  if (argc > 1 && argv[argc - 1][0] != '-') {
    g_icg_binary = argv[argc - 1];
    doctest_argc = argc - 1;
  }
  doctest::Context ctx;
  ctx.applyCommandLine(doctest_argc, argv);
  return ctx.run();
}
