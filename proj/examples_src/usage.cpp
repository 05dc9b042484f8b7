// Builds a few groups, prints their invariants and checks every claim.

#include <iostream>

#include "centra/centra.hpp"

int main() {
  using namespace centra;

  for (const char* spec : {"S3", "Q8", "S4", "A5"}) {
    const FiniteGroup G = group_from_spec(spec);
    const GroupAnalysis a = analyze(G);
    write_json_line(std::cout, a.report);
    for (const auto& v : verify_all(a))
      if (v.status != Status::vacuous) write_json_line(std::cout, v);
  }

  // A group given by generator images, as in a corpus file.
  const auto records = parse_corpus(R"({"name": "D8 on 4", "degree": 4, "generators": [[1,2,3,0],[3,2,1,0]]})");
  const FiniteGroup D8 = group_from_record(records.front());
  const auto profile = centralizer_profile(D8);
  std::cout << D8.name() << ": order " << D8.order() << ", " << profile.n() << " centralizers, "
            << "largest non-commuting set " << a_measure(D8, profile).size << "\n";
  return is_isomorphic(D8, group_from_spec("D8")) ? 0 : 1;
}
