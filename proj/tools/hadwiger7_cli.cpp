// placeholder until the library is complete
int main() { return 0; }
