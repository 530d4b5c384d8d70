#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snort/io.hpp"
#include "snort/solver.hpp"

namespace snort {

/// One human-versus-engine game. Mutations go through the owning
/// GameService, which holds `mutex` for the duration.
struct GameSession {
  std::string id;
  GraphPtr graph;
  Player human = Player::Left;
  Player first = Player::Left;
  std::vector<std::pair<Player, int>> history;
  Position current;
  Player to_move = Player::Left;
  Solver engine;
  std::mutex mutex;

  GameSession(std::string id, GraphPtr graph, Player human, Player first);
};

struct ServiceResponse {
  int status = 200;
  json body;
};

/// Session store and request handlers behind the HTTP API. Handlers are
/// safe to call concurrently; each session serializes its own mutations.
class GameService {
 public:
  /// With a journal path, existing events are replayed and new ones are
  /// appended as JSON lines.
  explicit GameService(std::optional<std::filesystem::path> journal = std::nullopt);

  ServiceResponse create_game(const json& body);
  ServiceResponse get_game(const std::string& id);
  ServiceResponse post_move(const std::string& id, const json& body);
  ServiceResponse analysis(const std::string& id);
  ServiceResponse families() const;

  /// Routes a raw request; body is parsed as JSON where needed.
  ServiceResponse handle(std::string_view method, std::string_view path, std::string_view body);

  std::size_t session_count() const;

 private:
  std::shared_ptr<GameSession> find(const std::string& id) const;
  std::shared_ptr<GameSession> open_session(const std::string& id, Family family, int n,
                                            Player human, Player first);
  /// Engine moves while it is the engine's turn; returns the vertices played.
  void engine_turn(GameSession& session);
  void record_move(GameSession& session, Player player, int vertex);
  void append_journal(const json& event);
  void replay_journal();
  json session_state(const GameSession& session) const;
  std::string new_id();

  mutable std::mutex store_mutex_;
  std::map<std::string, std::shared_ptr<GameSession>> sessions_;
  std::optional<std::filesystem::path> journal_;
  std::mutex journal_mutex_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;
};

/// Largest n offered for interactive play.
int interactive_max_n(Family family);

/// HTTP front end for a GameService (JSON in and out, permissive CORS).
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();

  /// Binds host:port; port 0 picks a free port. Returns the bound port, or
  /// -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called from another thread.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving the API on host:port until the process is stopped.
/// Returns false if the socket could not be bound.
bool serve_http(GameService& service, const std::string& host, int port);

}  // namespace snort
