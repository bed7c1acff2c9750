// Placeholder main; the full CLI lands with the verifier/assembler modules.
#include <cstdio>

int main() {
    std::puts("dsq: subcommands pending");
    return 1;
}
