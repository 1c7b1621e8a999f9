/*
   Copyright 2026 The galois-forge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// galois-forge check <cfg.json> [--orientation one|both] [--output json|text]
// galois-forge construct <cfg.json> [--implicitize] [--out-dir D]
// galois-forge search <space.json> [--max-results N] [--threads N]
// galois-forge verify-paper [--char0]

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "galois_forge/commands.hpp"

namespace {

bool read_file(const std::string& path, std::string& text)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot read " << path << "\n";
        return false;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    namespace gf = galois_forge;
    CLI::App app{"Two Galois points on rational curves: criterion, models and search"};
    app.require_subcommand(1);

    std::string path;
    gf::check_options check_opts;
    auto* check = app.add_subcommand("check", "Evaluate the criterion on a configuration");
    check->add_option("config", path, "Configuration JSON")->required();
    check->add_option("--orientation", check_opts.orientation, "one or both")
        ->check(CLI::IsMember({"one", "both"}));
    check->add_option("--output", check_opts.output, "json or text")->check(CLI::IsMember({"json", "text"}));

    gf::construct_options construct_opts;
    bool implicitize = false;
    auto* construct = app.add_subcommand("construct", "Build and verify the plane model of a passing configuration");
    construct->add_option("config", path, "Configuration JSON")->required();
    construct->add_flag("--implicitize", implicitize, "Also compute the implicit equation");
    construct->add_option("--out-dir", construct_opts.out_dir, "Directory for the artifacts");

    gf::search_options search_opts;
    auto* search = app.add_subcommand("search", "Enumerate a search space for passing configurations");
    search->add_option("space", path, "Search space JSON")->required();
    search->add_option("--max-results", search_opts.max_results, "Stop after N catalog entries");
    search->add_option("--threads", search_opts.threads, "Worker threads");

    bool char0 = false;
    auto* verify = app.add_subcommand("verify-paper", "Recompute the reference embeddings and compare");
    verify->add_flag("--char0", char0, "Also run curves 2 and 3 over Q(zeta_20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : gf::exit_input;
    }

    std::string text;
    if (*check) {
        if (!read_file(path, text))
            return gf::exit_input;
        return gf::cmd_check(text, check_opts, std::cout, std::cerr);
    }
    if (*construct) {
        if (!read_file(path, text))
            return gf::exit_input;
        if (implicitize)
            construct_opts.implicitize = true;
        return gf::cmd_construct(text, construct_opts, std::cout, std::cerr);
    }
    if (*search) {
        if (!read_file(path, text))
            return gf::exit_input;
        return gf::cmd_search(text, search_opts, std::cout, std::cerr);
    }
    return gf::cmd_verify_paper(char0, std::cout, std::cerr);
}
