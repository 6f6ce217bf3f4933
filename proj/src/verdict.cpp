#include "refchoice/verdict.hpp"

namespace refchoice {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Undetermined:
      return "undetermined";
  }
  return "undetermined";
}

}  // namespace refchoice
