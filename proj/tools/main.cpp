#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixgraph/excited.hpp"
#include "fixgraph/oracle.hpp"
#include "fixgraph/partition.hpp"
#include "fixgraph/spectra.hpp"
#include "fixgraph/tableaux.hpp"
#include "verify.hpp"

namespace {

using namespace fixgraph;
using nlohmann::ordered_json;

void render_plain(GraphParams p, const std::vector<SpectrumEntry>& entries, std::ostream& out) {
  out << "F(" << p.n << "," << p.k << "): degree " << connection_set_size(p) << ", "
      << entries.size() << " entries\n";

  std::size_t partition_width = std::string("partition").size();
  std::size_t eigenvalue_width = std::string("eigenvalue").size();
  std::size_t multiplicity_width = std::string("multiplicity").size();
  for (const SpectrumEntry& entry : entries) {
    partition_width = std::max(partition_width, entry.lambda.to_string().size());
    eigenvalue_width = std::max(eigenvalue_width, entry.eigenvalue.str().size());
    multiplicity_width = std::max(multiplicity_width, entry.multiplicity.str().size());
  }

  out << std::left << std::setw(static_cast<int>(partition_width)) << "partition" << "  "
      << std::right << std::setw(static_cast<int>(eigenvalue_width)) << "eigenvalue" << "  "
      << std::setw(static_cast<int>(multiplicity_width)) << "multiplicity" << '\n';
  for (const SpectrumEntry& entry : entries)
    out << std::left << std::setw(static_cast<int>(partition_width))
        << entry.lambda.to_string() << "  " << std::right
        << std::setw(static_cast<int>(eigenvalue_width)) << entry.eigenvalue.str() << "  "
        << std::setw(static_cast<int>(multiplicity_width)) << entry.multiplicity.str() << '\n';
}

void render_csv(const std::vector<SpectrumEntry>& entries, std::ostream& out) {
  out << "partition,eigenvalue,multiplicity\n";
  for (const SpectrumEntry& entry : entries)
    out << '"' << entry.lambda.to_exponent_string() << "\"," << entry.eigenvalue.str() << ','
        << entry.multiplicity.str() << '\n';
}

void render_json(GraphParams p, const std::vector<SpectrumEntry>& entries, std::ostream& out) {
  ordered_json doc;
  doc["n"] = p.n;
  doc["k"] = p.k;
  doc["degree"] = connection_set_size(p).str();
  ordered_json rows = ordered_json::array();
  for (const SpectrumEntry& entry : entries) {
    ordered_json row;
    const std::span<const int> parts = entry.lambda.parts();
    row["partition"] = std::vector<int>(parts.begin(), parts.end());
    row["eigenvalue"] = entry.eigenvalue.str();
    row["multiplicity"] = entry.multiplicity.str();
    rows.push_back(std::move(row));
  }
  doc["entries"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

std::string format_diagram(const Diagram& d) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const Cell& u : d.cells()) {
    if (!first) out << ',';
    out << '(' << u.row << ',' << u.col << ')';
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of the k-point fixing graphs F(n,k) on the symmetric group"};
  app.require_subcommand(1);

  int n = 0, k = 0, threads = 0;
  bool as_json = false, as_csv = false;
  CLI::App* spectrum_cmd =
      app.add_subcommand("spectrum", "Complete eigenvalue/multiplicity table of F(n,k)");
  spectrum_cmd->add_option("n", n, "number of points")->required();
  spectrum_cmd->add_option("k", k, "fixed points of every generator")->required();
  CLI::Option* json_opt = spectrum_cmd->add_flag("--json", as_json, "emit JSON");
  spectrum_cmd->add_flag("--csv", as_csv, "emit CSV")->excludes(json_opt);
  spectrum_cmd->add_option("--threads", threads, "worker threads (<= 0 means all cores)");

  std::string lambda_text, mu_text;
  CLI::App* eta_cmd = app.add_subcommand("eta", "Single eigenvalue of F(n,k)");
  eta_cmd->add_option("lambda", lambda_text, "partition, e.g. \"2,1\" or \"2^3,1\"")->required();
  eta_cmd->add_option("n", n, "number of points")->required();
  eta_cmd->add_option("k", k, "fixed points of every generator")->required();

  bool excited_json = false;
  CLI::App* excited_cmd =
      app.add_subcommand("excited", "List the excited diagrams of a skew shape");
  excited_cmd->add_option("lambda", lambda_text, "outer partition")->required();
  excited_cmd->add_option("mu", mu_text, "inner partition")->required();
  excited_cmd->add_flag("--json", excited_json, "emit JSON");

  CLI::App* syt_cmd = app.add_subcommand("syt", "Count standard Young tableaux");
  syt_cmd->add_option("lambda", lambda_text, "shape")->required();
  CLI::Option* syt_mu_opt = syt_cmd->add_option("mu", mu_text, "subshape to skew by");

  int verify_n_max = 0, verify_cap = fixgraph::verify::kDefaultCap;
  std::optional<int> verify_k;
  std::vector<std::string> checks;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the self-verification suites up to n-max");
  verify_cmd->add_option("n-max", verify_n_max, "largest group degree to verify")->required();
  verify_cmd->add_option("k", verify_k, "restrict to a single k");
  verify_cmd->add_option("--checks", checks, "comma-separated suite subset")->delimiter(',');
  verify_cmd->add_option("--cap-n", verify_cap, "largest admissible n-max");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum_cmd) {
      const GraphParams p(n, k);
      const std::vector<SpectrumEntry> entries = spectrum(p, threads);
      if (as_json)
        render_json(p, entries, std::cout);
      else if (as_csv)
        render_csv(entries, std::cout);
      else
        render_plain(p, entries, std::cout);
      return 0;
    }
    if (*eta_cmd) {
      const Partition lambda = Partition::parse(lambda_text);
      const GraphParams p(n, k);
      const BigInt value = eigenvalue(lambda, p);
      const BigInt degree = syt_count(lambda);
      std::cout << "eigenvalue: " << value << "\nmultiplicity: " << degree * degree << '\n';
      return 0;
    }
    if (*excited_cmd) {
      const ExcitedDiagramSet set =
          enumerate_excited(Partition::parse(lambda_text), Partition::parse(mu_text));
      if (excited_json) {
        ordered_json doc;
        const std::span<const int> lp = set.lambda.parts();
        const std::span<const int> mp = set.mu.parts();
        doc["lambda"] = std::vector<int>(lp.begin(), lp.end());
        doc["mu"] = std::vector<int>(mp.begin(), mp.end());
        ordered_json diagrams = ordered_json::array();
        for (const Diagram& d : set.diagrams) {
          ordered_json cells = ordered_json::array();  // row-major [row, col] pairs
          for (const Cell& u : d.cells()) cells.push_back({u.row, u.col});
          diagrams.push_back(std::move(cells));
        }
        doc["diagrams"] = std::move(diagrams);
        doc["count"] = set.diagrams.size();
        std::cout << doc.dump(2) << '\n';
      } else {
        for (const Diagram& d : set.diagrams) std::cout << format_diagram(d) << '\n';
        std::cout << "count: " << set.diagrams.size() << '\n';
      }
      return 0;
    }
    if (*syt_cmd) {
      const Partition lambda = Partition::parse(lambda_text);
      if (syt_mu_opt->count() > 0)
        std::cout << syt_count(lambda, Partition::parse(mu_text)) << '\n';
      else
        std::cout << syt_count(lambda) << '\n';
      return 0;
    }
    if (*verify_cmd) {
      if (verify_n_max < 0 || verify_n_max > verify_cap) {
        std::cerr << "error: n-max must lie in [0, " << verify_cap
                  << "]; raise --cap-n deliberately for larger runs\n";
        return 2;
      }
      fixgraph::verify::Options options;
      options.n_max = verify_n_max;
      options.k = verify_k;
      options.suites = checks;
      return fixgraph::verify::run(options, std::cout) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;  // unreachable with require_subcommand(1)
}
