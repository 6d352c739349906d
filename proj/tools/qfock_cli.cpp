#include <cstdio>
int main() { std::puts("qfock"); return 0; }
