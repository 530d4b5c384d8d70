#include "snort/service.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <httplib.h>

namespace snort {

GameSession::GameSession(std::string id_, GraphPtr graph_, Player human_, Player first_)
    : id(std::move(id_)),
      graph(std::move(graph_)),
      human(human_),
      first(first_),
      current(Position::initial(graph)),
      to_move(first_) {}

namespace {

ServiceResponse error(int status, std::string message) {
  return {status, json{{"error", std::move(message)}}};
}

constexpr int kInteractiveVertexLimit = 26;

int vertex_count(Family family, int n) {
  try {
    return build_family(family, n).size();
  } catch (const InvalidArgument&) {
    return kMaxVertices + 1;
  }
}

bool game_over(const GameSession& s) { return s.current.legal_set(s.to_move) == 0; }

/// Accepts a vertex index or a label string.
std::optional<int> parse_vertex(const Graph& graph, const json& value) {
  if (value.is_number_integer()) return value.get<int>();
  if (value.is_string()) {
    try {
      return graph.find(VertexLabel::parse(value.get<std::string>())).value_or(-1);
    } catch (const InvalidArgument&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Player> player_field(const json& body, std::initializer_list<const char*> keys,
                                   Player fallback, bool& malformed) {
  for (const char* key : keys) {
    if (!body.contains(key)) continue;
    const auto& value = body.at(key);
    if (!value.is_string()) {
      malformed = true;
      return std::nullopt;
    }
    try {
      return parse_player(value.get<std::string>());
    } catch (const InvalidArgument&) {
      malformed = true;
      return std::nullopt;
    }
  }
  return fallback;
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    auto end = path.find('/');
    parts.push_back(path.substr(0, end));
    if (end == std::string_view::npos) break;
    path.remove_prefix(end);
  }
  return parts;
}

}  // namespace

int interactive_max_n(Family family) {
  int n = 0;
  while (vertex_count(family, n + 1) <= kInteractiveVertexLimit) ++n;
  return n;
}

GameService::GameService(std::optional<std::filesystem::path> journal)
    : journal_(std::move(journal)), salt_(std::random_device{}()) {
  salt_ = (salt_ << 32) ^ std::random_device{}();
  if (journal_) replay_journal();
}

std::string GameService::new_id() {
  std::ostringstream out;
  out << std::hex << mix64(++counter_ ^ salt_);
  return out.str();
}

std::size_t GameService::session_count() const {
  std::lock_guard lock(store_mutex_);
  return sessions_.size();
}

std::shared_ptr<GameSession> GameService::find(const std::string& id) const {
  std::lock_guard lock(store_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::shared_ptr<GameSession> GameService::open_session(const std::string& id, Family family,
                                                       int n, Player human, Player first) {
  auto graph = std::make_shared<const Graph>(build_family(family, n));
  auto session = std::make_shared<GameSession>(id, std::move(graph), human, first);
  std::lock_guard lock(store_mutex_);
  sessions_[id] = session;
  return session;
}

json GameService::session_state(const GameSession& s) const {
  json history = json::array();
  for (auto [player, v] : s.history)
    history.push_back(
        {{"player", player_name(player)}, {"vertex", v}, {"label", s.graph->label(v).str()}});
  const bool over = game_over(s);
  const bool human_turn = !over && s.to_move == s.human;
  json state = {
      {"id", s.id},
      {"family", family_name(s.graph->family())},
      {"n", s.graph->n()},
      {"graph", graph_to_json(*s.graph)},
      {"position", position_to_json(s.current)},
      {"to_move", player_name(s.to_move)},
      {"human", player_name(s.human)},
      {"first", player_name(s.first)},
      {"history", std::move(history)},
      {"legal_moves", human_turn ? s.current.legal_moves(s.human) : std::vector<int>{}},
      {"game_over", over},
      {"winner", nullptr},
  };
  if (over) state["winner"] = player_name(opponent(s.to_move));
  return state;
}

void GameService::append_journal(const json& event) {
  if (!journal_) return;
  std::lock_guard lock(journal_mutex_);
  std::ofstream out(*journal_, std::ios::app);
  out << event.dump() << '\n';
}

void GameService::record_move(GameSession& s, Player player, int vertex) {
  s.current = s.current.apply_move(player, vertex);
  s.history.emplace_back(player, vertex);
  s.to_move = opponent(player);
  append_journal({{"event", "move"}, {"id", s.id}, {"player", player_name(player)}, {"vertex", vertex}});
}

void GameService::engine_turn(GameSession& s) {
  const Player engine = opponent(s.human);
  if (s.to_move != engine || game_over(s)) return;
  const auto best = s.engine.best_moves(s.current, engine);
  const int reply = best.empty() ? __builtin_ctzll(s.current.legal_set(engine)) : best.front();
  record_move(s, engine, reply);
}

void GameService::replay_journal() {
  std::ifstream in(*journal_);
  std::string line;
  while (std::getline(in, line)) {
    const json event = json::parse(line, nullptr, false);
    if (event.is_discarded() || !event.is_object()) continue;
    // A torn or corrupt event is skipped; later lines still apply.
    try {
      const std::string kind = event.value("event", "");
      const std::string id = event.value("id", "");
      if (kind == "create") {
        open_session(id, parse_family(event.at("family").get<std::string>()),
                     event.at("n").get<int>(), parse_player(event.at("human").get<std::string>()),
                     parse_player(event.at("first").get<std::string>()));
        ++counter_;
      } else if (kind == "move") {
        auto s = find(id);
        if (!s) continue;
        const Player player = parse_player(event.at("player").get<std::string>());
        const int v = event.at("vertex").get<int>();
        s->current = s->current.apply_move(player, v);
        s->history.emplace_back(player, v);
        s->to_move = opponent(player);
      }
    } catch (const std::exception&) {
    }
  }
}

ServiceResponse GameService::create_game(const json& body) {
  if (!body.is_object()) return error(422, "body must be a JSON object");
  if (!body.contains("family") || !body.at("family").is_string())
    return error(422, "field 'family' (string) is required");
  if (!body.contains("n") || !body.at("n").is_number_integer())
    return error(422, "field 'n' (integer) is required");
  Family family;
  try {
    family = parse_family(body.at("family").get<std::string>());
  } catch (const InvalidArgument& e) {
    return error(422, e.what());
  }
  const int n = body.at("n").get<int>();
  if (n < 1 || n > interactive_max_n(family))
    return error(422, "n must lie in 1.." + std::to_string(interactive_max_n(family)));
  bool malformed = false;
  const auto human = player_field(body, {"human_player", "human"}, Player::Left, malformed);
  const auto first = player_field(body, {"first"}, Player::Left, malformed);
  if (malformed) return error(422, "players must be \"Left\" or \"Right\"");

  std::string id;
  {
    std::lock_guard lock(store_mutex_);
    id = new_id();
  }
  auto session = open_session(id, family, n, *human, *first);
  append_journal({{"event", "create"},
                  {"id", id},
                  {"family", family_name(family)},
                  {"n", n},
                  {"human", player_name(*human)},
                  {"first", player_name(*first)}});
  std::lock_guard lock(session->mutex);
  try {
    engine_turn(*session);
  } catch (const ResourceExhausted& e) {
    return error(503, e.what());
  }
  return {201, session_state(*session)};
}

ServiceResponse GameService::get_game(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown game id");
  std::lock_guard lock(s->mutex);
  return {200, session_state(*s)};
}

ServiceResponse GameService::post_move(const std::string& id, const json& body) {
  auto s = find(id);
  if (!s) return error(404, "unknown game id");
  if (!body.is_object() || !body.contains("vertex"))
    return error(422, "field 'vertex' (index or label) is required");
  std::lock_guard lock(s->mutex);
  const auto vertex = parse_vertex(*s->graph, body.at("vertex"));
  if (!vertex) return error(422, "field 'vertex' must be an index or a vertex label");
  if (game_over(*s)) {
    auto r = error(409, "game is over");
    r.body["position"] = position_to_json(s->current);
    return r;
  }
  if (s->to_move != s->human) {
    auto r = error(409, "not the human player's turn");
    r.body["position"] = position_to_json(s->current);
    return r;
  }
  try {
    record_move(*s, s->human, *vertex);
  } catch (const IllegalMove& e) {
    auto r = error(409, e.what());
    r.body["position"] = position_to_json(s->current);
    return r;
  }
  const std::size_t before = s->history.size();
  try {
    engine_turn(*s);
  } catch (const ResourceExhausted& e) {
    return error(503, e.what());
  }
  json state = session_state(*s);
  state["engine_move"] = nullptr;
  if (s->history.size() > before) {
    const int reply = s->history.back().second;
    state["engine_move"] = {{"vertex", reply}, {"label", s->graph->label(reply).str()}};
  }
  return {200, std::move(state)};
}

ServiceResponse GameService::analysis(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "unknown game id");
  std::lock_guard lock(s->mutex);
  try {
    const Outcome outcome = s->engine.outcome(s->current);
    const auto winning = s->engine.best_moves(s->current, s->to_move);
    return {200,
            {{"id", s->id},
             {"position", position_to_json(s->current)},
             {"to_move", player_name(s->to_move)},
             {"outcome", outcome_name(outcome)},
             {"winning_moves", labels_to_json(*s->graph, to_set(winning))},
             {"winning_move_indices", winning}}};
  } catch (const ResourceExhausted& e) {
    return error(503, e.what());
  }
}

ServiceResponse GameService::families() const {
  json list = json::array();
  for (Family family : all_families()) {
    json supported_n = json::array();
    const int max_n = interactive_max_n(family);
    for (int n = 1; n <= max_n; ++n)
      if (has_strategy(family, n)) supported_n.push_back(n);
    list.push_back({{"family", family_name(family)},
                    {"rows", family_rows(family)},
                    {"min_n", 1},
                    {"max_n", max_n},
                    {"strategy_n", std::move(supported_n)}});
  }
  return {200, {{"families", std::move(list)}}};
}

ServiceResponse GameService::handle(std::string_view method, std::string_view path,
                                    std::string_view body) {
  const auto parts = split_path(path);
  auto parse_body = [&]() -> std::optional<json> {
    json doc = json::parse(body.empty() ? std::string_view("{}") : body, nullptr, false);
    if (doc.is_discarded()) return std::nullopt;
    return doc;
  };

  if (parts.size() == 1 && parts[0] == "families" && method == "GET") return families();
  if (!parts.empty() && parts[0] == "games") {
    if (parts.size() == 1 && method == "POST") {
      auto doc = parse_body();
      if (!doc) return error(422, "malformed JSON body");
      return create_game(*doc);
    }
    if (parts.size() >= 2) {
      const std::string id(parts[1]);
      if (parts.size() == 2 && method == "GET") return get_game(id);
      if (parts.size() == 3 && parts[2] == "moves" && method == "POST") {
        if (!find(id)) return error(404, "unknown game id");
        auto doc = parse_body();
        if (!doc) return error(422, "malformed JSON body");
        return post_move(id, *doc);
      }
      if (parts.size() == 3 && parts[2] == "analysis" && method == "GET") return analysis(id);
    }
  }
  return error(404, "no route for " + std::string(method) + " " + std::string(path));
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>()) {
  auto bridge = [&service](const char* method) {
    return [&service, method](const httplib::Request& req, httplib::Response& res) {
      const ServiceResponse r = service.handle(method, req.path, req.body);
      res.status = r.status;
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_content(r.body.dump(), "application/json");
    };
  };
  auto& server = impl_->server;
  server.Get(".*", bridge("GET"));
  server.Post(".*", bridge("POST"));
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

bool serve_http(GameService& service, const std::string& host, int port) {
  HttpServer server(service);
  if (server.bind(host, port) < 0) return false;
  server.run();
  return true;
}

}  // namespace snort
