#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qfold/group.hpp"
#include "qfold/quiver.hpp"

namespace qfold {

/// Transport-free request: the HTTP layer and the tests both go through handle().
struct Request {
  std::string method;  // GET, PUT, POST
  std::string path;    // e.g. /api/session/3/mutate
  std::string body;
  std::map<std::string, std::string> query;
};

struct Response {
  int status = 200;
  std::string body;  // JSON
};

/// Editing sessions for the explorer UI. Each session holds a quiver, an optional group
/// action, the evolving framed quiver (when the quiver has no frozen vertices) and an
/// undo stack. Requests on one session are serialized; sessions are independent.
class SessionService {
 public:
  static constexpr std::size_t history_limit = 1000;

  Response handle(const Request& request);

 private:
  struct State {
    Quiver quiver;
    std::optional<QuiverAction> action;
    std::optional<FramedQuiver> framed;
  };
  struct Session {
    std::mutex mutex;
    State state;
    std::vector<State> history;
  };

  std::shared_ptr<Session> find(const std::string& id);
  Response dispatch(Session& s, const std::string& method, const std::string& verb, const Request& r);

  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long next_id_ = 1;
};

}  // namespace qfold
