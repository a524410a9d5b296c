// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace laakso {

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> issues;

  void fail(std::string what) {
    ok = false;
    issues.push_back(std::move(what));
  }
};

/// Re-checks a serialized certificate from raw distances alone. The checker
/// shares no code with the searches that produced the document: it rebuilds
/// the graphs, runs its own breadth-first distance scans, and re-derives
/// every claimed value. Upper bounds on sup-norms come from the triangle
/// inequality (sup_z |rho(x,z)-rho(y,z)| <= rho(x,y)), lower bounds from
/// explicit evaluation points, so its verdict does not depend on any lemma
/// the producer relied on.
///
/// Dispatches on doc["type"]: "refutation_certificate" or
/// "separation_family".
VerifyResult verify_document(const nlohmann::json& doc, int cap);

}  // namespace laakso
