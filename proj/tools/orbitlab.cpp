// Placeholder main; the real CLI lands with the io module.
int main() { return 0; }
