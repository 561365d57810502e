#include <iostream>

int main() {
  std::cout << "odoprime (cli wiring pending)\n";
  return 0;
}
