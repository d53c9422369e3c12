"""Local HTTP API for assisted play.

The browser client mirrors a game played elsewhere: it posts each guess
with the colors the real game showed, and reads back the feasible count,
a suggested next guess, and the surviving words.  The service never
knows the secret.  Session state is the history alone; every response is
a pure function of (dictionary, history), so replaying identical
requests yields identical responses.  Sessions live in memory and die
with the process.

Wire format, all under /api/v1:
  POST /sessions {"dictionary": name} -> {"session", "k", "size"}
  POST /sessions/{id}/feedback {"guess", "marking"} -> {"feasible"}
  GET  /sessions/{id}/suggestion -> {"word", "mode", "feasible"}
  GET  /sessions/{id}/feasible?limit=N -> {"total", "words"}
  POST /sessions/{id}/undo -> {"feasible"}
  GET  /dictionaries -> {"dictionaries": [{"name", "k", "size"}]}
Errors carry {"error": code, "detail": text}.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .errors import UnknownSymbol, WordleKitError
from .feasibility import FeasibleSet, filter_feasible
from .model import Dictionary, parse_dictionary, parse_marking
from .strategies import suggest_guess

EXACT_THRESHOLD = 64
LIST_LIMIT_DEFAULT = 50


class ServiceError(Exception):
    def __init__(self, status: int, code: str, detail: str):
        super().__init__(detail)
        self.status = status
        self.code = code
        self.detail = detail


@dataclass
class Session:
    id: str
    dictionary_name: str
    dictionary: Dictionary
    history: list = field(default_factory=list)
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)


class CreateBody(BaseModel):
    dictionary: str


class FeedbackBody(BaseModel):
    guess: str
    marking: str


def load_dictionary_dir(dict_dir: str) -> dict:
    """All *.dict files in a directory; commas in the first line mean tokens."""
    out: dict = {}
    for path in sorted(Path(dict_dir).glob("*.dict")):
        text = path.read_text()
        fmt = "tokens" if "," in text.split("\n", 1)[0] else "chars"
        out[path.stem] = parse_dictionary(text, fmt=fmt)
    if not out:
        raise ValueError(f"no .dict files in {dict_dir}")
    return out


def create_app(dict_dir: str | None = None, dictionaries: dict | None = None) -> FastAPI:
    """App factory; dictionaries can be given directly or read from a dir."""
    if dictionaries is None:
        if dict_dir is None:
            raise ValueError("need dict_dir or dictionaries")
        dictionaries = load_dictionary_dir(dict_dir)

    app = FastAPI(title="wordlekit assistant", openapi_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict = {}
    registry_lock = threading.Lock()

    @app.exception_handler(ServiceError)
    async def service_error(_req: Request, exc: ServiceError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": exc.code, "detail": exc.detail},
        )

    @app.exception_handler(RequestValidationError)
    async def validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error": "invalid_request", "detail": str(exc.errors())},
        )

    def get_session(sid: str) -> Session:
        with registry_lock:
            session = sessions.get(sid)
        if session is None:
            raise ServiceError(404, "unknown_session", f"no session {sid!r}")
        return session

    def feasible_for(session: Session, history) -> FeasibleSet:
        return filter_feasible(session.dictionary, history)

    @app.get("/api/v1/dictionaries")
    def list_dictionaries():
        return {
            "dictionaries": [
                {"name": name, "k": d.k, "size": len(d)}
                for name, d in sorted(dictionaries.items())
            ]
        }

    @app.post("/api/v1/sessions")
    def create_session(body: CreateBody):
        d = dictionaries.get(body.dictionary)
        if d is None:
            raise ServiceError(
                404, "unknown_dictionary", f"no dictionary {body.dictionary!r}"
            )
        session = Session(
            id=uuid.uuid4().hex, dictionary_name=body.dictionary, dictionary=d
        )
        with registry_lock:
            sessions[session.id] = session
        return {"session": session.id, "k": d.k, "size": len(d)}

    @app.post("/api/v1/sessions/{sid}/feedback")
    def post_feedback(sid: str, body: FeedbackBody):
        session = get_session(sid)
        d = session.dictionary
        try:
            guess = d.alphabet.encode_guess(body.guess)
        except UnknownSymbol as e:
            raise ServiceError(400, "bad_guess", str(e))
        if len(guess) != d.k:
            raise ServiceError(
                400, "bad_guess",
                f"guess has {len(guess)} symbols, the dictionary uses {d.k}",
            )
        try:
            m = parse_marking(body.marking, d.k)
        except WordleKitError as e:
            raise ServiceError(400, "bad_marking", str(e))
        with session.lock:
            candidate = session.history + [(guess, m)]
            f = feasible_for(session, candidate)
            if f.is_empty:
                # reject rather than record: the session stays consistent
                raise ServiceError(
                    409, "inconsistent_feedback",
                    "no dictionary word matches all feedback entered so far",
                )
            session.history = candidate
            session.updated = time.time()
            return {"feasible": f.count}

    @app.post("/api/v1/sessions/{sid}/undo")
    def undo_last(sid: str):
        session = get_session(sid)
        with session.lock:
            if not session.history:
                raise ServiceError(409, "nothing_to_undo", "history is empty")
            session.history = session.history[:-1]
            session.updated = time.time()
            f = feasible_for(session, session.history)
            return {"feasible": f.count}

    @app.get("/api/v1/sessions/{sid}/suggestion")
    def get_suggestion(sid: str):
        session = get_session(sid)
        with session.lock:
            history = list(session.history)
        f = feasible_for(session, history)
        word, mode = suggest_guess(
            session.dictionary, f, exact_threshold=EXACT_THRESHOLD
        )
        return {
            "word": session.dictionary.alphabet.word_text(word),
            "mode": mode,
            "feasible": f.count,
        }

    @app.get("/api/v1/sessions/{sid}/feasible")
    def list_feasible(sid: str, limit: int = LIST_LIMIT_DEFAULT):
        if limit < 0:
            raise ServiceError(400, "invalid_request", "limit must be non-negative")
        session = get_session(sid)
        with session.lock:
            history = list(session.history)
        f = feasible_for(session, history)
        texts = f.word_texts()
        return {"total": f.count, "words": texts[:limit]}

    return app
