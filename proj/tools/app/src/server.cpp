#include "seqgame/app/server.hpp"

#include <functional>
#include <string>

namespace seqgame::app {

namespace {

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

Json body_of(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded()) throw BadRequest("body is not valid JSON");
  if (!j.is_object()) throw BadRequest("body must be a JSON object");
  return j;
}

// Runs a handler and maps service errors onto status codes.
httplib::Server::Handler guarded(std::function<void(const httplib::Request&, httplib::Response&)> f) {
  return [f = std::move(f)](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const NotFound& e) {
      reply(res, 404, {{"error", e.what()}});
    } catch (const Conflict& e) {
      reply(res, 409, {{"error", e.what()}});
    } catch (const BadRequest& e) {
      reply(res, 400, {{"error", e.what()}});
    } catch (const Json::exception& e) {
      reply(res, 400, {{"error", e.what()}});
    } catch (const std::exception& e) {
      reply(res, 500, {{"error", e.what()}});
    }
  };
}

}  // namespace

void install_routes(httplib::Server& server, SessionService& service) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/games.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  server.Post("/games", guarded([&service](const httplib::Request& req, httplib::Response& res) {
    const Json body = body_of(req);
    if (!body.contains("kind") || !body.at("kind").is_string()) throw BadRequest("missing \"kind\"");
    const Json config = body.contains("config") ? body.at("config") : Json::object();
    const Json state = service.create_session(body.at("kind").get<std::string>(), config);
    reply(res, 201, {{"id", state.at("id")}, {"state", state}});
  }));

  server.Get("/games/:id", guarded([&service](const httplib::Request& req, httplib::Response& res) {
    reply(res, 200, service.get_state(req.path_params.at("id")));
  }));

  server.Post("/games/:id/moves", guarded([&service](const httplib::Request& req, httplib::Response& res) {
    const Json body = body_of(req);
    if (!body.contains("move")) throw BadRequest("missing \"move\"");
    reply(res, 200, service.submit_human_move(req.path_params.at("id"), body.at("move")));
  }));

  server.Post("/games/:id/ai-move", guarded([&service](const httplib::Request& req, httplib::Response& res) {
    const Json body = body_of(req);
    std::optional<std::size_t> lookahead;
    if (body.contains("lookahead") && !body.at("lookahead").is_null()) {
      const Json& n = body.at("lookahead");
      if (!n.is_number_integer() || n.get<long long>() < 1) throw BadRequest("lookahead must be a positive integer");
      lookahead = n.get<std::size_t>();
    }
    const AiReply r = service.request_ai_move(req.path_params.at("id"), lookahead);
    if (!r.ready) {
      reply(res, 202, {{"status", "computing"}, {"state", r.state}});
      return;
    }
    reply(res, 200, {{"move", r.move}, {"state", r.state}});
  }));
}

}  // namespace seqgame::app
