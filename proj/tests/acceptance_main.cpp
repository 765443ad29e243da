int main() { return 0; } // placeholder until the acceptance suite lands
