#include "common.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

int main(int argc, char ** argv)
{
    CLI::App app{"Ramsey properties of random graphs and hypergraphs"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    cli::GlobalOptions global;
    cli::Registry registry;
    cli::add_graph_commands(app, registry, global);
    cli::add_hypergraph_commands(app, registry, global);
    cli::add_random_commands(app, registry, global);
    for (auto & [sub, run] : registry.commands)
        cli::add_global_options(*sub, global);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 1;
    }

    try {
        for (auto & [sub, run] : registry.commands) {
            if (!sub->parsed())
                continue;
            auto start = std::chrono::steady_clock::now();
            auto outcome = run();
            auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            if (outcome.timed && !global.no_timing)
                outcome.doc["wall_ms"] = std::round(elapsed.count() * 1000.0) / 1000.0;
            if (global.output.empty())
                cli::render(std::cout, outcome, global.format);
            else {
                std::ofstream file(global.output);
                if (!file)
                    throw cli::UsageError("cannot write " + global.output);
                cli::render(file, outcome, global.format);
            }
            return outcome.inconclusive ? 2 : 0;
        }
    }
    catch (const cli::InputError & e) {
        std::cerr << "ramsey: input error: " << e.what() << '\n';
        return 1;
    }
    catch (const std::exception & e) {
        std::cerr << "ramsey: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
