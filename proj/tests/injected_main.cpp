// The CLI with a classifier that leaks a basis-dependent entry into the
// encoding; verify must reject it.
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  slocc::Classifier leaky = [](const slocc::MatrixPair& s) {
    slocc::CanonicalForm cf = slocc::classify(s);
    cf.encoding += " " + s.gamma2()(0, 0).to_string();
    return cf;
  };
  return slocc::cli::run(argc, argv, leaky, std::cout, std::cerr);
}
