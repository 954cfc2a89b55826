#include "regsel/service.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "regsel/error.hpp"
#include "regsel/report.hpp"

namespace regsel {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Session {
  std::mutex m; // one writer per session
  std::string id;
  std::string board_text;
  GameInstance initial;
  GameInstance game;
  Clock::time_point created, updated;

  Session(std::string id_, std::string text, LampBoard b)
      : id(std::move(id_)), board_text(std::move(text)), initial(std::move(b)), game(initial),
        created(Clock::now()), updated(created) {}
};

std::string fresh_id() {
  static std::mutex m;
  static std::mt19937_64 rng(std::random_device{}());
  std::lock_guard lock(m);
  std::ostringstream s;
  s << std::hex << rng() << rng();
  return s.str();
}

json state_json(const Session &s) {
  return {{"id", s.id},
          {"lamps", s.game.lamps().to_string()},
          {"history", s.game.history()},
          {"won", s.game.won()}};
}

void send(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

} // namespace

struct Service::Impl {
  ServiceOptions opt;
  httplib::Server server;
  mutable std::mutex sessions_m;
  std::map<std::string, std::shared_ptr<Session>> sessions;

  void expire() {
    std::lock_guard lock(sessions_m);
    const auto now = Clock::now();
    for (auto it = sessions.begin(); it != sessions.end();) {
      std::unique_lock sl(it->second->m, std::try_to_lock);
      if (sl.owns_lock() && now - it->second->updated > opt.idle_ttl)
        it = sessions.erase(it);
      else
        ++it;
    }
  }

  std::shared_ptr<Session> find(const std::string &id) {
    expire();
    std::lock_guard lock(sessions_m);
    auto it = sessions.find(id);
    if (it == sessions.end())
      throw Error("unknown_session", "no session " + id);
    return it->second;
  }

  std::shared_ptr<Session> create(const std::string &text, const std::string &id = fresh_id()) {
    auto s = std::make_shared<Session>(id, text, parse_board_text(text));
    std::lock_guard lock(sessions_m);
    sessions[s->id] = s;
    return s;
  }

  template <class F> static httplib::Server::Handler guard(F f) {
    return [f](const httplib::Request &req, httplib::Response &res) {
      try {
        f(req, res);
      } catch (const Error &e) {
        send(res, e.code() == "unknown_session" ? 404 : 400, error_json(e.code(), e.what()));
      } catch (const json::exception &e) {
        send(res, 400, error_json("bad_json", e.what()));
      } catch (const std::exception &e) {
        send(res, 500, error_json("internal", e.what()));
      }
    };
  }

  void routes() {
    server.Post("/api/v1/session", guard([this](const httplib::Request &req, httplib::Response &res) {
                  auto s = create(req.body);
                  std::lock_guard lock(s->m);
                  json out = state_json(*s);
                  out["board"] = board_to_json(s->game.board());
                  send(res, 201, out);
                }));
    server.Get(R"(/api/v1/session/([0-9a-f]+))",
               guard([this](const httplib::Request &req, httplib::Response &res) {
                 auto s = find(req.matches[1]);
                 std::lock_guard lock(s->m);
                 json out = state_json(*s);
                 out["board"] = board_to_json(s->game.board());
                 send(res, 200, out);
               }));
    server.Delete(R"(/api/v1/session/([0-9a-f]+))",
                  guard([this](const httplib::Request &req, httplib::Response &res) {
                    auto s = find(req.matches[1]);
                    std::lock_guard lock(sessions_m);
                    sessions.erase(s->id);
                    send(res, 200, {{"deleted", s->id}});
                  }));
    server.Post(R"(/api/v1/session/([0-9a-f]+)/move)",
                guard([this](const httplib::Request &req, httplib::Response &res) {
                  auto s = find(req.matches[1]);
                  auto body = json::parse(req.body);
                  if (!body.contains("region") || !body["region"].is_number_integer())
                    throw Error("bad_request", "move needs an integer \"region\"");
                  std::lock_guard lock(s->m);
                  s->game = s->game.apply_rcc(body["region"].get<int>());
                  s->updated = Clock::now();
                  send(res, 200, state_json(*s));
                }));
    server.Get(R"(/api/v1/session/([0-9a-f]+)/hint)",
               guard([this](const httplib::Request &req, httplib::Response &res) {
                 auto s = find(req.matches[1]);
                 std::lock_guard lock(s->m);
                 json out = solve_report(s->game, opt.budget);
                 if (out["solved"].get<bool>() && !out["regions"].empty())
                   out["region"] = out["regions"][0];
                 send(res, 200, out);
               }));
    auto analyze = guard([this](const httplib::Request &req, httplib::Response &res) {
      std::string text = req.has_param("board") ? req.get_param_value("board") : req.body;
      send(res, 200, analyze_report(parse_board_text(text), opt.budget));
    });
    server.Get("/api/v1/analyze", analyze);
    server.Post("/api/v1/analyze", analyze);
    if (!opt.static_dir.empty())
      server.set_mount_point("/", opt.static_dir);
  }

  void load_snapshot() {
    std::ifstream in(opt.snapshot_path);
    if (!in)
      return;
    json j = json::parse(in);
    for (const auto &e : j.at("sessions")) {
      auto s = create(e.at("board").get<std::string>(), e.at("id").get<std::string>());
      s->game = s->initial.apply_all(e.at("history").get<std::vector<int>>());
    }
  }

  void save_snapshot() const {
    json arr = json::array();
    std::lock_guard lock(sessions_m);
    for (const auto &[id, s] : sessions) {
      std::lock_guard sl(s->m);
      arr.push_back({{"id", id}, {"board", s->board_text}, {"history", s->game.history()}});
    }
    std::ofstream(opt.snapshot_path) << json{{"sessions", arr}}.dump(1) << "\n";
  }
};

Service::Service(ServiceOptions opt) : impl_(std::make_unique<Impl>()) {
  impl_->opt = std::move(opt);
  impl_->routes();
  if (!impl_->opt.snapshot_path.empty())
    impl_->load_snapshot();
}

Service::~Service() = default;

int Service::bind(const std::string &host, int port) {
  if (port == 0)
    return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void Service::run() { impl_->server.listen_after_bind(); }

void Service::stop() {
  impl_->server.stop();
  if (!impl_->opt.snapshot_path.empty())
    impl_->save_snapshot();
}

std::size_t Service::session_count() const {
  std::lock_guard lock(impl_->sessions_m);
  return impl_->sessions.size();
}

} // namespace regsel
