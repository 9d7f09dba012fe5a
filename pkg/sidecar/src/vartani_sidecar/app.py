"""HTTP surface: the candidate wire protocol plus a health endpoint.

POST /v1/predict
    {"tokens": [...], "mask_index": int, "top_k": int}
    -> 200 {"candidates": [{"token": str, "prob": float}, ...]}
GET /v1/health
    -> 200 {"status": "ok"}

Request validation is explicit so every schema violation answers 400 with
{"error": "<message>"}; inference failures answer 500 in the same shape.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .model import MaskedWordModel

MASK_TOKEN = "[MASK]"


class BadRequest(Exception):
    pass


def _validated(body) -> tuple[list[str], int, int]:
    if not isinstance(body, dict):
        raise BadRequest("body must be a JSON object")
    tokens = body.get("tokens")
    mask_index = body.get("mask_index")
    top_k = body.get("top_k")
    if (
        not isinstance(tokens, list)
        or not tokens
        or not all(isinstance(t, str) and t for t in tokens)
    ):
        raise BadRequest("tokens must be a non-empty array of non-empty strings")
    if not isinstance(mask_index, int) or isinstance(mask_index, bool):
        raise BadRequest("mask_index must be an integer")
    if not 0 <= mask_index < len(tokens):
        raise BadRequest("mask_index out of range")
    if tokens[mask_index] != MASK_TOKEN:
        raise BadRequest(f"tokens[{mask_index}] is not {MASK_TOKEN}")
    if not isinstance(top_k, int) or isinstance(top_k, bool) or top_k < 1:
        raise BadRequest("top_k must be an integer >= 1")
    return tokens, mask_index, top_k


def create_app(model: MaskedWordModel, top_k_cap: int = 100) -> FastAPI:
    if top_k_cap < 1:
        raise ValueError("top_k_cap must be >= 1")
    app = FastAPI(title="vartani-sidecar", docs_url=None, redoc_url=None)

    @app.get("/v1/health")
    def health():
        return {"status": "ok"}

    @app.post("/v1/predict")
    async def predict(request: Request):
        try:
            body = await request.json()
        except Exception:
            return JSONResponse({"error": "body is not valid JSON"}, status_code=400)
        try:
            tokens, mask_index, top_k = _validated(body)
        except BadRequest as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        try:
            scored = model.predict(tokens, mask_index, min(top_k, top_k_cap))
        except Exception as exc:  # inference failure
            return JSONResponse({"error": f"inference failed: {exc}"}, status_code=500)
        return {
            "candidates": [
                {"token": word, "prob": prob} for word, prob in scored if prob > 0.0
            ]
        }

    return app
