// Writes the bundled fixture files in canonical serialized form.
#include <iostream>

#include "migraph/fixtures.hpp"
#include "migraph/json_io.hpp"

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    migraph::save_graph_file(migraph::fixtures::fig1(), dir + "/fig1.json");
    migraph::save_graph_file(migraph::fixtures::gitlab(), dir + "/gitlab.json");
    std::cout << "wrote " << dir << "/fig1.json and " << dir << "/gitlab.json\n";
    return 0;
}
