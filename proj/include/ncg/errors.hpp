#ifndef NCG_ERRORS_HPP
#define NCG_ERRORS_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncg {

/// Thrown when an operation needs structure the object does not carry
/// (typically an involution).
class unsupported_operation : public std::logic_error {
 public:
  explicit unsupported_operation(const std::string& what)
      : std::logic_error(what) {}
};

/// Itemized outcome of a structural validation; empty means all checks held.
struct ValidationReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string msg) { failures.push_back(std::move(msg)); }

  std::string summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    os << failures.size() << " failure(s):";
    for (const auto& f : failures) os << "\n  - " << f;
    return os.str();
  }
};

}  // namespace ncg

#endif  // NCG_ERRORS_HPP
