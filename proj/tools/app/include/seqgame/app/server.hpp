// JSON routes over a SessionService.
//
//   POST /games                {"kind","config"}  -> 201 {"id","state"}
//   GET  /games/{id}                              -> 200 state
//   POST /games/{id}/moves     {"move"}           -> 200 state
//   POST /games/{id}/ai-move   {"lookahead"?}     -> 200 {"move","state"}, 202 while computing
//
// Errors come back as {"error": message} with 400, 404 or 409.

#pragma once

#include "httplib.h"
#include "seqgame/app/session.hpp"

namespace seqgame::app {

void install_routes(httplib::Server& server, SessionService& service);

}  // namespace seqgame::app
