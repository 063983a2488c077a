#include <cstdio>

int main() {
    std::puts("mcfs: placeholder");
    return 0;
}
