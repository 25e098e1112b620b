// placeholder; the full CLI is added with the remaining modules
int main() { return 0; }
